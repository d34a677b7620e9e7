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

#ifndef WEYLNET_COMMUTING_SETS_HPP
#define WEYLNET_COMMUTING_SETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weylnet/network.hpp"

namespace weylnet {

enum class SetMethod { A, B, cat, c_exact, c_heuristic };

std::string to_string(SetMethod m);

/// A set of pure N-cluster labels (no identity entries) on N nodes of
/// dimension n, all pairwise commuting.
struct CommutingSet {
  int n = 2;
  int nodes = 1;
  std::vector<ProductLabel> members;
  SetMethod method = SetMethod::A;
  std::uint64_t expansions = 0;  // branch-and-bound nodes visited (search only)

  std::size_t size() const { return members.size(); }
};

/// sum_i (a_i d_i - b_i c_i) mod n.
int symplectic_form(const ProductLabel& x, const ProductLabel& y);

/// Two cluster operators commute iff the symplectic form vanishes.
bool commute_check(const ProductLabel& x, const ProductLabel& y);

/// Number of single-node basis operators commuting with U_ab, by direct count.
int partner_count(const WeylIndex& w);
/// n gcd(a, b, n).
int partner_count_formula(const WeylIndex& w);

/// True when every pair of members commutes, checked on indices.
bool pairwise_commuting(const std::vector<ProductLabel>& members);
/// Same check on the Kronecker product matrices.
bool pairwise_commuting_matrix(const std::vector<ProductLabel>& members, double tol = kDefaultTolerances.matrix);

/// All products U_{a0} x ... x U_{a0} with a != 0 on each node.
CommutingSet construct_method_A(int n, int nodes);
/// U_ab x U_ba pairs; an odd last node takes U_{c0}.
CommutingSet construct_method_B(int n, int nodes);
/// The pure N-cluster stabilizers of the cat state |Cat_0>: labels
/// (a,...,a; b_1,...,b_N) with sum b = 0 mod n.
CommutingSet construct_cat_stabilizers(int n, int nodes);

/// n^N - 1.
std::int64_t bound_D(int n, int nodes);

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // node expansions
  /// Puts the first vertex into every clique. Valid for prime n only, where
  /// local symplectic maps act transitively on the graph; ignored otherwise.
  bool fix_first_vertex = true;
  /// Graphs larger than this are not built; the result is then the best
  /// construction greedily extended, tagged heuristic.
  std::size_t max_vertices = 4096;
};

/// Maximum clique in the commutation graph of pure N-cluster labels.
/// Tagged c_exact when the search completes within budget.
CommutingSet search_max_commuting(int n, int nodes, const SearchOptions& opt = {});

/// Adds, in lexicographic order, every pure N-cluster label commuting with
/// all current members.
CommutingSet greedy_extend(const CommutingSet& set);

struct CommonEigenstate {
  StateVector vector;
  /// Commuting labels (identity entries allowed) closing the set to a group.
  std::vector<ProductLabel> completion;
  /// Independent elements generating the completion.
  std::vector<ProductLabel> generators;
  std::size_t target_size = 0;  // n^N
  bool complete = false;        // completion.size() == target_size
  std::size_t full_support_count = 0;
  double max_residual = 0;      // max || U psi - lambda psi || over completion
};

/// Completes the set to n^N commuting labels and returns their common
/// eigenvector. When completion stalls the partial group is reported; the
/// vector is then an eigenvector of the partial group only.
CommonEigenstate common_eigenstate(const CommutingSet& set, std::uint64_t seed = 0,
                                   std::int64_t cap = kDefaultDimensionCap);

struct TableRow {
  int n = 2;
  int nodes = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  bool c_exact = false;
  std::int64_t d = 0;
  std::int64_t cat = 0;
};

TableRow table_row(int n, int nodes, const SearchOptions& opt = {});

}  // namespace weylnet

#endif  // WEYLNET_COMMUTING_SETS_HPP
