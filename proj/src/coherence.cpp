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

#include "weylnet/coherence.hpp"

#include <cmath>
#include <sstream>

#include "weylnet/linalg.hpp"

namespace weylnet {

namespace {

std::vector<Operator> weyl_basis(int n) {
  std::vector<Operator> ops;
  ops.reserve(n * n);
  for (int i = 0; i < n * n; ++i) ops.push_back(weyl_matrix(WeylIndex::from_single(i, n)));
  return ops;
}

}  // namespace

CoherenceVector::CoherenceVector(int n, StateVector values) : n_(n), values_(std::move(values)) {
  if (n < 2) throw InvalidInput("CoherenceVector: n must be >= 2");
  if (values_.size() != n * n - 1) throw InvalidInput("CoherenceVector: expected n^2 - 1 components");
}

Complex CoherenceVector::at(int a, int b) const {
  const int i = WeylIndex(a, b, n_).single_index();
  return i == 0 ? Complex(1, 0) : values_(i - 1);
}

Operator CoherenceVector::density() const {
  Operator rho = Operator::Identity(n_, n_);
  for (int i = 1; i < n_ * n_; ++i) rho += values_(i - 1) * weyl_matrix(WeylIndex::from_single(i, n_));
  return rho / static_cast<double>(n_);
}

CoherenceVector expand_state(const Operator& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() < 2) throw InvalidInput("expand_state: rho must be square with dim >= 2");
  if (!all_finite(rho)) throw InvalidInput("expand_state: non-finite entries");
  if (!is_hermitian(rho, tol)) throw InvalidInput("expand_state: rho is not hermitian");
  if (std::abs(rho.trace() - Complex(1, 0)) > tol) throw InvalidInput("expand_state: tr rho != 1");
  Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) throw InvalidInput("expand_state: rho is not positive semidefinite");
  const int n = static_cast<int>(rho.rows());
  StateVector u(n * n - 1);
  for (int i = 1; i < n * n; ++i) {
    const WeylIndex idx = WeylIndex::from_single(i, n);
    // tr{U^dagger rho} = sum_k conj(omega^{bk}) rho(k+a, k)
    Complex acc = 0;
    for (int k = 0; k < n; ++k)
      acc += std::conj(root_of_unity(n, static_cast<long long>(idx.b()) * k)) * rho((k + idx.a()) % n, k);
    u(i - 1) = acc;
  }
  return CoherenceVector(n, std::move(u));
}

Operator rotation_matrix(const Operator& propagator, double tol) {
  if (!is_unitary(propagator, tol)) throw InvalidInput("rotation_matrix: propagator is not unitary");
  const int n = static_cast<int>(propagator.rows());
  const auto basis = weyl_basis(n);
  const int m = n * n - 1;
  Operator t(m, m);
  for (int i = 1; i <= m; ++i) {
    const Operator left = propagator.adjoint() * basis[i].adjoint() * propagator;
    for (int j = 1; j <= m; ++j) t(i - 1, j - 1) = (left * basis[j]).trace() / static_cast<double>(n);
  }
  return t;
}

Operator generator_matrix(const Operator& hamiltonian, double tol) {
  if (!is_hermitian(hamiltonian, tol)) throw InvalidInput("generator_matrix: hamiltonian is not hermitian");
  const int n = static_cast<int>(hamiltonian.rows());
  const auto basis = weyl_basis(n);
  const int m = n * n - 1;
  Operator omega(m, m);
  const Complex pref = Complex(0, 1) / static_cast<double>(n);  // -1/(n i)
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const Operator comm = basis[i].adjoint() * basis[j] - basis[j] * basis[i].adjoint();
      omega(i - 1, j - 1) = pref * (hamiltonian * comm).trace();
    }
  return omega;
}

CoherenceVector integrate_coherence(const Operator& omega, const CoherenceVector& u0, double t,
                                    double max_step) {
  double scale = 0;
  if (omega.size() > 0) {
    Eigen::JacobiSVD<Operator> svd(omega);
    scale = svd.singularValues()(0);
  }
  if (max_step <= 0) max_step = scale > 0 ? 0.01 / scale : t;
  const int steps = t == 0 ? 0 : static_cast<int>(std::ceil(std::abs(t) / max_step));
  const double h = steps == 0 ? 0 : t / steps;
  StateVector u = u0.values();
  for (int s = 0; s < steps; ++s) {
    const StateVector k1 = omega * u;
    const StateVector k2 = omega * (u + 0.5 * h * k1);
    const StateVector k3 = omega * (u + 0.5 * h * k2);
    const StateVector k4 = omega * (u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return CoherenceVector(u0.n(), std::move(u));
}

std::string coherence_csv(const CoherenceVector& u) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << "a,b,re,im\n";
  const int n = u.n();
  for (int i = 1; i < n * n; ++i)
    os << i / n << ',' << i % n << ',' << u[i].real() << ',' << u[i].imag() << '\n';
  return os.str();
}

}  // namespace weylnet
