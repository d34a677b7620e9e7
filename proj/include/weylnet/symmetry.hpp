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

#ifndef WEYLNET_SYMMETRY_HPP
#define WEYLNET_SYMMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weylnet/types.hpp"

namespace weylnet {

/// Permutation of two-level nodes: the factor on node mu moves to node
/// perm[mu].
Operator permutation_operator(const std::vector<int>& perm);

/// Total spin of N two-level nodes with |1> as spin up.
Operator total_spin_squared(int nodes);
Operator total_spin_z(int nodes);
Operator total_lowering(int nodes);

struct SymmetryClass {
  double j = 0;
  int multiplicity = 0;
  /// copies[c][k] has magnetic number m = j - k.
  std::vector<std::vector<StateVector>> copies;

  int dimension() const { return static_cast<int>(2 * j + 1.5); }
};

/// Joint eigenbasis of S^2 and S_z, highest j first. Each copy starts from a
/// highest-weight vector obtained by Gram-Schmidt over projected
/// computational states in index order, then lowered with S_-.
std::vector<SymmetryClass> spin_basis(int nodes);

/// Weight of a pure state in each class, same order as spin_basis.
std::vector<double> spin_class_weights(const std::vector<SymmetryClass>& basis, const StateVector& psi);

struct YoungVector {
  std::string config;    // spin configuration of the table row
  double m = 0;
  double j = 0;
  std::string tableau;   // rows separated by '|'
  StateVector vector;
};

/// The sixteen-vector Young basis for N = 4. The tabulated j = 0 pair overlaps
/// by 1/2; with orthonormalize set the second vector is replaced by its
/// Gram-Schmidt complement against the first.
std::vector<YoungVector> young_basis_n4(bool orthonormalize = true);

struct SuperselectionReport {
  int nodes = 0;
  double max_cross_j = 0;       // largest |<j|E|j'>| with j != j'
  double max_cross_copy = 0;    // largest element between different copies of a j
  double max_copy_mismatch = 0; // spread of the per-copy blocks of a j
  std::int64_t parameter_count = 0;  // sum (2j+1)^2
  std::int64_t operator_count = 0;   // number of b = 0 collective operators
};

/// Matrix elements of every b = 0 collective operator in the spin basis.
SuperselectionReport superselection_check(int nodes);

/// Largest |<u|E|v>| over b = 0 collective operators and Young vectors u, v
/// of different j.
double young_cross_class_elements(const std::vector<YoungVector>& basis);

struct SymmetryBreakingReport {
  std::vector<double> initial_weights;   // |0000>
  std::vector<double> prepared_weights;  // singlet x |00>
  std::vector<double> class_j;           // j of each weight entry
  double prep_error = 0;                 // || prepared - singlet x |00> ||
  double max_leakage = 0;                // outside the reachable three-dimensional space
  double max_class_leakage = 0;          // outside the j = 1 class
};

/// Prepares the singlet on nodes 1-2 of |0000> with X x X, a Hadamard on
/// node 1 and a CNOT, then evolves under a random permutation-symmetric H.
SymmetryBreakingReport symmetry_breaking_scenario(std::uint64_t seed = 0, double t_max = 50.0, int steps = 100);

}  // namespace weylnet

#endif  // WEYLNET_SYMMETRY_HPP
