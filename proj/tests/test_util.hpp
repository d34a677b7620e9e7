// Copyright 2026 The weylnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for the unit tests. Everything here is written against
// plain Eigen so that it can serve as an independent reference.

#ifndef WEYLNET_TESTS_TEST_UTIL_HPP
#define WEYLNET_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace testutil {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Cx omega(int n, long long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
  return {std::cos(angle), std::sin(angle)};
}

// X|k> = |k+1>, Z|k> = omega^k |k>
inline Mat shift(int n) {
  Mat m = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) m((k + 1) % n, k) = 1.0;
  return m;
}

inline Mat clock(int n) {
  Mat m = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = omega(n, k);
  return m;
}

inline Mat mat_pow(const Mat& m, int p) {
  Mat r = Mat::Identity(m.rows(), m.cols());
  for (int i = 0; i < p; ++i) r = r * m;
  return r;
}

// U_ab = X^a Z^b
inline Mat weyl_ref(int a, int b, int n) { return mat_pow(shift(n), a) * mat_pow(clock(n), b); }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

inline Mat kron_list(const std::vector<Mat>& f) {
  Mat r = Mat::Identity(1, 1);
  for (const auto& m : f) r = kron(r, m);
  return r;
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline Mat random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Cx(g(rng), g(rng));
  return m;
}

inline Mat random_herm(int n, std::mt19937_64& rng) {
  Mat m = random_matrix(n, rng);
  return 0.5 * (m + m.adjoint());
}

inline Vec random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = Cx(g(rng), g(rng));
  return v / v.norm();
}

inline Mat random_rho(int n, std::mt19937_64& rng) {
  Mat a = random_matrix(n, rng);
  Mat r = a * a.adjoint();
  return r / r.trace().real();
}

// QR of a gaussian matrix with phases fixed by the diagonal of R
inline Mat random_unitary_ref(int n, std::mt19937_64& rng) {
  Mat a = random_matrix(n, rng);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Cx d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline Vec basis_ket(int dim, int k) {
  Vec v = Vec::Zero(dim);
  v(k) = 1.0;
  return v;
}

// Index of the product ket |d_0 d_1 ...>, node 0 most significant.
inline int ket_index(const std::vector<int>& digits, int n) {
  int idx = 0;
  for (int d : digits) idx = idx * n + d;
  return idx;
}

}  // namespace testutil

#endif  // WEYLNET_TESTS_TEST_UTIL_HPP
