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

#include "weylnet/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace weylnet {

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Operator kron_all(std::span<const Operator> factors) {
  Operator out = Operator::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

bool is_hermitian(const Operator& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Operator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Operator::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool all_finite(const Operator& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

Operator unitary_propagator(const Operator& hamiltonian, double t) {
  const Eigen::Index d = hamiltonian.rows();
  const Operator off = hamiltonian - Operator(hamiltonian.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() == 0.0) {
    Operator u = Operator::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) u(i, i) = std::exp(Complex(0, -t * hamiltonian(i, i).real()));
    return u;
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(hamiltonian);
  const RealVector& e = es.eigenvalues();
  StateVector phases(d);
  for (Eigen::Index i = 0; i < d; ++i) phases(i) = std::exp(Complex(0, -t * e(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Operator expm(const Operator& m) { return m.exp(); }

Operator partial_trace(const Operator& rho, std::span<const int> dims, std::uint64_t keep_mask) {
  const int nodes = static_cast<int>(dims.size());
  std::vector<int> kept, traced;
  for (int mu = 0; mu < nodes; ++mu) ((keep_mask >> mu) & 1u ? kept : traced).push_back(mu);
  std::int64_t dk = 1, dt = 1;
  for (int mu : kept) dk *= dims[mu];
  for (int mu : traced) dt *= dims[mu];
  // strides of each node in the full index (node 0 most significant)
  std::vector<std::int64_t> stride(nodes);
  std::int64_t s = 1;
  for (int mu = nodes - 1; mu >= 0; --mu) {
    stride[mu] = s;
    s *= dims[mu];
  }
  auto offset = [&](const std::vector<int>& which, std::int64_t code) {
    std::int64_t off = 0;
    for (int i = static_cast<int>(which.size()) - 1; i >= 0; --i) {
      const int mu = which[i];
      off += (code % dims[mu]) * stride[mu];
      code /= dims[mu];
    }
    return off;
  };
  std::vector<std::int64_t> kept_off(dk), traced_off(dt);
  for (std::int64_t c = 0; c < dk; ++c) kept_off[c] = offset(kept, c);
  for (std::int64_t c = 0; c < dt; ++c) traced_off[c] = offset(traced, c);
  Operator out = Operator::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j) {
      Complex acc = 0;
      for (std::int64_t t = 0; t < dt; ++t) acc += rho(kept_off[i] + traced_off[t], kept_off[j] + traced_off[t]);
      out(i, j) = acc;
    }
  return out;
}

double purity(const Operator& rho) { return (rho * rho).trace().real(); }

double entropy_bits(const Operator& rho) {
  Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
  double s = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

double phase_optimized_distance(const Operator& u) {
  // minimized at phi = arg tr u
  const Complex t = u.trace();
  const Complex phase = std::abs(t) > 0 ? t / std::abs(t) : Complex(1.0);
  return (u - phase * Operator::Identity(u.rows(), u.cols())).norm();
}

Operator random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Operator z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Operator> qr(z);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= a > 0 ? d / a : Complex(1, 0);
  }
  return q;
}

StateVector random_pure_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v.normalized();
}

Operator random_density(int n, std::mt19937_64& rng, int rank) {
  if (rank <= 0 || rank > n) rank = n;
  std::normal_distribution<double> g(0.0, 1.0);
  Operator a(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) a(i, j) = Complex(g(rng), g(rng));
  Operator rho = a * a.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

Operator random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Operator a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

std::int64_t product(std::span<const int> dims) {
  std::int64_t p = 1;
  for (int d : dims) p *= d;
  return p;
}

}  // namespace weylnet
