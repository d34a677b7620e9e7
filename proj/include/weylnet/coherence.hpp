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

#ifndef WEYLNET_COHERENCE_HPP
#define WEYLNET_COHERENCE_HPP

#include <string>
#include <vector>

#include "weylnet/operator_core.hpp"

namespace weylnet {

/// Complex coherence vector u_i = tr{U_i^dagger rho}, i = n a + b in
/// [1, n^2). The identity component u_0 = 1 is not stored.
class CoherenceVector {
 public:
  CoherenceVector(int n, StateVector values);

  int n() const { return n_; }
  const StateVector& values() const { return values_; }

  /// Component for single index i in [1, n^2).
  Complex operator[](int i) const { return values_(i - 1); }
  Complex at(int a, int b) const;

  double norm_squared() const { return values_.squaredNorm(); }

  /// (1/n)(1 + sum_i u_i U_i)
  Operator density() const;

 private:
  int n_;
  StateVector values_;
};

/// Validates rho (hermitian, unit trace, PSD within tol) and expands it.
CoherenceVector expand_state(const Operator& rho, double tol = kDefaultTolerances.state);

/// T_ij = (1/n) tr{U^dagger U_i^dagger U U_j}, so that u(t) = T u(0) for
/// rho(t) = U rho U^dagger. Indices run over [1, n^2).
Operator rotation_matrix(const Operator& propagator, double tol = kDefaultTolerances.unitarity);

/// Omega_ij = -(1/(n i)) tr{H [U_i^dagger, U_j]}, with hbar = 1, so that
/// du/dt = Omega u.
Operator generator_matrix(const Operator& hamiltonian, double tol = kDefaultTolerances.state);

/// Integrates du/dt = Omega u with classical fixed-step RK4. A step of
/// 0 picks 0.01 / ||Omega||_2.
CoherenceVector integrate_coherence(const Operator& omega, const CoherenceVector& u0, double t,
                                    double max_step = 0.0);

/// Rows "a,b,re,im" with a header line.
std::string coherence_csv(const CoherenceVector& u);

}  // namespace weylnet

#endif  // WEYLNET_COHERENCE_HPP
