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

#ifndef WEYLNET_NETWORK_HPP
#define WEYLNET_NETWORK_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "weylnet/operator_core.hpp"

namespace weylnet {

/// Density operator of an N-node network. Node 0 is the leftmost
/// (most significant) Kronecker factor.
class NetworkState {
 public:
  /// Validates hermiticity, unit trace and positivity of rho, and that the
  /// global dimension matches prod(dims) and stays within cap.
  static NetworkState from_density(std::vector<int> dims, Operator rho,
                                   std::int64_t cap = kDefaultDimensionCap,
                                   double tol = kDefaultTolerances.state);
  static NetworkState from_pure(std::vector<int> dims, const StateVector& psi,
                                std::int64_t cap = kDefaultDimensionCap);

  const std::vector<int>& dims() const { return dims_; }
  int nodes() const { return static_cast<int>(dims_.size()); }
  std::int64_t dimension() const { return rho_.rows(); }
  const Operator& rho() const { return rho_; }
  bool uniform() const;

 private:
  NetworkState(std::vector<int> dims, Operator rho) : dims_(std::move(dims)), rho_(std::move(rho)) {}
  std::vector<int> dims_;
  Operator rho_;
};

/// One Weyl index per node; (0,0) is the identity on that node.
struct ProductLabel {
  std::vector<WeylIndex> entries;

  static ProductLabel identity(const std::vector<int>& dims);
  int order() const;                 // number of non-identity entries
  std::uint64_t support() const;     // bit mu set when node mu is acted on
  friend bool operator==(const ProductLabel&, const ProductLabel&) = default;
  friend auto operator<=>(const ProductLabel&, const ProductLabel&) = default;
};

/// Kronecker product of the per-node basis operators, node order 0..N-1.
Operator cluster_operator(const ProductLabel& label);
Operator cluster_operator(const ProductLabel& label, const std::vector<int>& dims);

/// Expectation values u = tr{rho Q^dagger} keyed by label.
struct CorrelationTensorSet {
  std::vector<int> dims;
  std::map<ProductLabel, Complex> values;

  Complex at(const ProductLabel& label) const;
};

CorrelationTensorSet correlation_tensors(const NetworkState& state, int max_order);

/// Calls visit(shift, phase, value) for every product label of the network,
/// where shift[mu] = a_mu, phase[mu] = b_mu and value = tr{rho Q^dagger}.
/// Labels are produced shift-major through a mixed-radix DFT of the shifted
/// diagonals, so the cost is O(D^2 sum n_mu) with no D x D temporaries.
void for_each_correlation(const NetworkState& state,
                          const std::function<void(const std::vector<int>& shift,
                                                   const std::vector<int>& phase, Complex value)>& visit);

/// Cluster sums Y indexed by node-subset bitmask; y[0] = 1.
struct ClusterSumTable {
  std::vector<int> dims;
  std::vector<double> y;

  double at(std::uint64_t mask) const { return y.at(mask); }
  double total() const;
  /// tr{rho^2} prod n_mu, the value the total must match.
  double sum_rule_target = 0;
};

/// Direct route: accumulates |u|^2 of every correlation tensor by support.
ClusterSumTable cluster_sums(const NetworkState& state);

/// Direct route for a pure state without forming the density matrix.
ClusterSumTable cluster_sums(const std::vector<int>& dims, const StateVector& psi,
                             std::int64_t cap = kDefaultDimensionCap);

/// Reduced density operator of a pure state on the nodes in keep_mask.
Operator reduced_density(const std::vector<int>& dims, const StateVector& psi, std::uint64_t keep_mask);

/// Alternate route: Moebius inversion of d_S tr{rho_S^2} over subsets.
ClusterSumTable cluster_sums_from_purities(const NetworkState& state);

struct ClusterPurity {
  std::uint64_t mask = 0;
  int size = 0;
  double p_from_purity = 0;        // (n^m tr{rho_S^2} - 1) / (n^m - 1)
  double p_from_cluster_sums = 0;  // sum_{T subset S, T != 0} Y_T / (n^m - 1)
  double entropy_bits = 0;
};

struct PurityReport {
  int n = 2;
  int nodes = 0;
  std::vector<ClusterPurity> clusters;  // every non-empty subset, by mask

  const ClusterPurity& at(std::uint64_t mask) const { return clusters.at(mask - 1); }
  /// Largest disagreement between the two p routes.
  double max_route_gap() const;
};

/// Requires n_mu = n for all nodes.
PurityReport purity_factors(const NetworkState& state);

struct ProductTestResult {
  bool non_product = false;                 // a witness was found
  std::optional<std::uint64_t> witness;     // subset whose joint Y beats the product
  double product_value = 0;
  double joint_value = 0;
};

/// partition: blocks of node indices covering all nodes. Reports the first
/// subset S (in mask order) meeting two or more blocks with
/// prod_B Y_{S & B} < Y_S - tol.
ProductTestResult product_state_test(const NetworkState& state, const std::vector<std::vector<int>>& partition,
                                     double tol = kDefaultTolerances.cluster_sum);
ProductTestResult product_state_test(const ClusterSumTable& table, const std::vector<std::vector<int>>& partition,
                                     double tol = kDefaultTolerances.cluster_sum);

}  // namespace weylnet

#endif  // WEYLNET_NETWORK_HPP
