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

#ifndef WEYLNET_TYPES_HPP
#define WEYLNET_TYPES_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace weylnet {

template <typename Real>
using ComplexT = std::complex<Real>;

/// Dense square complex matrix. Carries operators, density matrices and
/// propagators alike; the dimension is rows() == cols().
template <typename Real>
using OperatorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using StateVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using Complex = ComplexT<double>;
using Operator = OperatorT<double>;
using StateVector = StateVectorT<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerances used by the self-checks. All are plain values so
/// callers can pass their own where an API accepts one.
struct Tolerances {
  double matrix = 1e-12;      // matrix-equality assertions, n <= 8
  double state = 1e-10;       // hermiticity, trace and PSD of density matrices
  double unitarity = 1e-8;    // ||U^dag U - 1|| for caller-supplied propagators
  double cluster_sum = 1e-9;  // sum rule and product-state witnesses
};

inline constexpr Tolerances kDefaultTolerances{};

/// Bad argument or malformed input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds a configured dimension cap or search budget
/// (CLI exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal self-check did not hold (CLI exit code 4).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on the global Hilbert-space dimension of a network.
inline constexpr std::int64_t kDefaultDimensionCap = 4096;

inline int positive_mod(long long value, int n) {
  long long r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// omega_n^k = exp(2 pi i k / n). Quarter turns are returned exactly.
template <typename Real = double>
ComplexT<Real> root_of_unity(int n, long long k) {
  const int r = positive_mod(k, n);
  if (r == 0) return {Real(1), Real(0)};
  if (2 * r == n) return {Real(-1), Real(0)};
  if (4 * r == n) return {Real(0), Real(1)};
  if (4 * r == 3 * n) return {Real(0), Real(-1)};
  const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(r) / Real(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace weylnet

#endif  // WEYLNET_TYPES_HPP
