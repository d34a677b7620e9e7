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

#ifndef WEYLNET_CAT_STATES_HPP
#define WEYLNET_CAT_STATES_HPP

#include <cstdint>
#include <vector>

#include "weylnet/collective.hpp"
#include "weylnet/network.hpp"

namespace weylnet {

/// c[0] sets the phase gradient across the superposition; c[k] for k >= 1
/// shifts node k.
using CatLabel = std::vector<int>;

/// (1/sqrt n) sum_j omega^{j c_0} |j> |j + c_1> ... |j + c_{N-1}>.
StateVector cat_state(int n, const CatLabel& c);

/// The same state built as (U_{0,c0} x U_{c1,0} x ...) |Cat_0>.
StateVector cat_state_from_operators(int n, const CatLabel& c);

/// All n^N labels in lexicographic order.
std::vector<CatLabel> all_cat_labels(int n, int nodes);

/// Closed-form cluster sum of an m-node cluster of an N-node cat state,
/// 1 <= m <= N.
std::int64_t cat_cluster_sum(int n, int m, int nodes);
/// (n^{m-1} - 1) / (n^m - 1); equals 0 for m = 1.
double cat_purity_factor(int n, int m);

struct CatProfile {
  int n = 2;
  int nodes = 2;
  std::vector<std::int64_t> y;  // index m = 0..N, y[0] = 1
  std::vector<double> p;        // index m = 0..N, p[0] unused
};

CatProfile cat_profile(int n, int nodes);

struct CatReport {
  int n = 2;
  int nodes = 2;
  double max_overlap_error = 0;     // |<c|c'> - delta|
  double completeness_error = -1;   // ||sum |c><c| - 1||, -1 when not all labels given
  double max_cluster_sum_error = 0;
  double max_purity_error = 0;
  double max_entropy_error = 0;     // proper clusters vs log2 n
  double ratio = 0;                 // Y_N / n^N
  double ratio_limit = 0;           // (n-1)/n
};

CatReport cat_verify(int n, int nodes, const std::vector<CatLabel>& sample, std::int64_t cap = kDefaultDimensionCap);

/// Collective expansion of |Cat_c><Cat_c| for two-level nodes.
CollectiveDecomposition cat_collective_decomposition(const CatLabel& c);

struct FigureRow {
  int n;
  int m;
  double p;
};

/// Purity factors p_m of cat states for n in [n_min, n_max], m in [1, m_max].
std::vector<FigureRow> cat_purity_figure(int n_min = 2, int n_max = 10, int m_max = 8);

}  // namespace weylnet

#endif  // WEYLNET_CAT_STATES_HPP
