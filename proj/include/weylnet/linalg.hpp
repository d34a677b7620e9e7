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

#ifndef WEYLNET_LINALG_HPP
#define WEYLNET_LINALG_HPP

#include <random>
#include <span>
#include <vector>

#include "weylnet/types.hpp"

namespace weylnet {

Operator kron(const Operator& a, const Operator& b);
Operator kron_all(std::span<const Operator> factors);
StateVector kron(const StateVector& a, const StateVector& b);

bool is_hermitian(const Operator& m, double tol);
bool is_unitary(const Operator& m, double tol);
bool all_finite(const Operator& m);

/// exp(-i H t) for hermitian H, through its eigendecomposition. Diagonal H
/// takes the direct path.
Operator unitary_propagator(const Operator& hamiltonian, double t);

/// General matrix exponential (scaling and squaring with Pade approximants).
Operator expm(const Operator& m);

/// Partial trace keeping the nodes whose bit is set in keep_mask. Node 0 is
/// the most significant factor of the Kronecker product.
Operator partial_trace(const Operator& rho, std::span<const int> dims, std::uint64_t keep_mask);

double purity(const Operator& rho);

/// von Neumann entropy in bits.
double entropy_bits(const Operator& rho);

/// min over phi of ||u - e^{i phi} 1||_F
double phase_optimized_distance(const Operator& u);

/// Haar-random unitary (QR of a Ginibre matrix with phase fix).
Operator random_unitary(int n, std::mt19937_64& rng);
StateVector random_pure_state(int n, std::mt19937_64& rng);
/// Random density matrix of the given rank (rank <= 0 means full rank).
Operator random_density(int n, std::mt19937_64& rng, int rank = 0);
Operator random_hermitian(int n, std::mt19937_64& rng);

std::int64_t product(std::span<const int> dims);

}  // namespace weylnet

#endif  // WEYLNET_LINALG_HPP
