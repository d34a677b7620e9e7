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

#include "weylnet/network.hpp"

#include <bit>
#include <cmath>

#include "weylnet/linalg.hpp"

namespace weylnet {

namespace {

void check_dims(const std::vector<int>& dims, std::int64_t cap) {
  if (dims.empty()) throw InvalidInput("network: at least one node required");
  if (dims.size() > 62) throw CapExceeded("network: too many nodes");
  std::int64_t d = 1;
  for (int n : dims) {
    if (n < 2 || n > 16) throw InvalidInput("network: node dimensions must lie in [2, 16]");
    d *= n;
    if (d > cap) throw CapExceeded("network: global dimension exceeds cap " + std::to_string(cap));
  }
}

// Mixed-radix bookkeeping for the global index, node 0 most significant.
struct Radix {
  std::vector<int> dims;
  std::vector<std::int64_t> stride;
  std::int64_t size = 1;
  std::vector<int> digits;  // size * N, row-major by index

  explicit Radix(const std::vector<int>& d) : dims(d), stride(d.size()) {
    const int nodes = static_cast<int>(d.size());
    for (int mu = nodes - 1; mu >= 0; --mu) {
      stride[mu] = size;
      size *= d[mu];
    }
    digits.resize(static_cast<std::size_t>(size) * nodes);
    for (std::int64_t i = 0; i < size; ++i) {
      std::int64_t r = i;
      for (int mu = nodes - 1; mu >= 0; --mu) {
        digits[i * nodes + mu] = static_cast<int>(r % d[mu]);
        r /= d[mu];
      }
    }
  }
  int digit(std::int64_t i, int mu) const { return digits[i * dims.size() + mu]; }
};

// Visits (shift index, phase index, value) for every label. f receives the
// global codes of a and b; digits are available through the radix.
// fill(row, col) supplies rho(row, col).
template <typename Fill, typename F>
void visit_correlations_impl(const Radix& rx, Fill&& fill, F&& f) {
  const int nodes = static_cast<int>(rx.dims.size());
  const std::int64_t d = rx.size;
  std::vector<Complex> buf(d), tmp(d);
  // per-node twiddles omega_n^{-j}
  std::vector<std::vector<Complex>> tw(nodes);
  for (int mu = 0; mu < nodes; ++mu)
    for (int j = 0; j < rx.dims[mu]; ++j) tw[mu].push_back(std::conj(root_of_unity(rx.dims[mu], j)));
  for (std::int64_t a = 0; a < d; ++a) {
    for (std::int64_t k = 0; k < d; ++k) {
      std::int64_t row = 0;
      for (int mu = 0; mu < nodes; ++mu) {
        const int n = rx.dims[mu];
        row += ((rx.digit(k, mu) + rx.digit(a, mu)) % n) * rx.stride[mu];
      }
      buf[k] = fill(row, k);
    }
    // u(a, b) = sum_k prod_mu omega^{-b_mu k_mu} g(k)
    for (int mu = 0; mu < nodes; ++mu) {
      const int n = rx.dims[mu];
      const std::int64_t s = rx.stride[mu];
      for (std::int64_t i = 0; i < d; ++i) {
        const int bdig = rx.digit(i, mu);
        const std::int64_t base = i - bdig * s;
        Complex acc = 0;
        for (int k = 0; k < n; ++k) acc += tw[mu][(bdig * k) % n] * buf[base + k * s];
        tmp[i] = acc;
      }
      std::swap(buf, tmp);
    }
    for (std::int64_t b = 0; b < d; ++b) f(a, b, buf[b]);
  }
}

template <typename F>
void visit_correlations(const NetworkState& state, const Radix& rx, F&& f) {
  const Operator& rho = state.rho();
  visit_correlations_impl(rx, [&](std::int64_t r, std::int64_t c) { return rho(r, c); }, f);
}

std::vector<std::uint64_t> nonzero_masks(const Radix& rx) {
  const int nodes = static_cast<int>(rx.dims.size());
  std::vector<std::uint64_t> m(rx.size, 0);
  for (std::int64_t i = 0; i < rx.size; ++i)
    for (int mu = 0; mu < nodes; ++mu)
      if (rx.digit(i, mu) != 0) m[i] |= std::uint64_t{1} << mu;
  return m;
}

}  // namespace

NetworkState NetworkState::from_density(std::vector<int> dims, Operator rho, std::int64_t cap, double tol) {
  check_dims(dims, cap);
  const std::int64_t d = product(dims);
  if (rho.rows() != d || rho.cols() != d) throw InvalidInput("network: rho dimension does not match prod(dims)");
  if (!all_finite(rho)) throw InvalidInput("network: non-finite entries");
  if (!is_hermitian(rho, tol)) throw InvalidInput("network: rho is not hermitian");
  if (std::abs(rho.trace() - Complex(1, 0)) > tol) throw InvalidInput("network: tr rho != 1");
  Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) throw InvalidInput("network: rho is not positive semidefinite");
  return NetworkState(std::move(dims), std::move(rho));
}

NetworkState NetworkState::from_pure(std::vector<int> dims, const StateVector& psi, std::int64_t cap) {
  check_dims(dims, cap);
  if (psi.size() != product(dims)) throw InvalidInput("network: state length does not match prod(dims)");
  const double norm = psi.norm();
  if (!(norm > 0)) throw InvalidInput("network: zero state vector");
  const StateVector v = psi / norm;
  return from_density(std::move(dims), v * v.adjoint(), cap);
}

bool NetworkState::uniform() const {
  for (int n : dims_)
    if (n != dims_.front()) return false;
  return true;
}

ProductLabel ProductLabel::identity(const std::vector<int>& dims) {
  ProductLabel l;
  for (int n : dims) l.entries.push_back(WeylIndex::identity(n));
  return l;
}

int ProductLabel::order() const {
  int m = 0;
  for (const auto& e : entries) m += e.is_identity() ? 0 : 1;
  return m;
}

std::uint64_t ProductLabel::support() const {
  std::uint64_t s = 0;
  for (std::size_t mu = 0; mu < entries.size(); ++mu)
    if (!entries[mu].is_identity()) s |= std::uint64_t{1} << mu;
  return s;
}

Operator cluster_operator(const ProductLabel& label) {
  std::vector<Operator> f;
  for (const auto& e : label.entries) f.push_back(weyl_matrix(e));
  return kron_all(f);
}

Operator cluster_operator(const ProductLabel& label, const std::vector<int>& dims) {
  if (label.entries.size() != dims.size()) throw InvalidInput("cluster_operator: label length does not match network");
  for (std::size_t mu = 0; mu < dims.size(); ++mu)
    if (label.entries[mu].n() != dims[mu]) throw InvalidInput("cluster_operator: node dimension mismatch");
  return cluster_operator(label);
}

Complex CorrelationTensorSet::at(const ProductLabel& label) const {
  const auto it = values.find(label);
  if (it == values.end()) throw InvalidInput("correlation tensor not computed for this label");
  return it->second;
}

void for_each_correlation(const NetworkState& state,
                          const std::function<void(const std::vector<int>&, const std::vector<int>&, Complex)>& visit) {
  const Radix rx(state.dims());
  const int nodes = state.nodes();
  std::vector<int> sa(nodes), sb(nodes);
  visit_correlations(state, rx, [&](std::int64_t a, std::int64_t b, Complex v) {
    for (int mu = 0; mu < nodes; ++mu) {
      sa[mu] = rx.digit(a, mu);
      sb[mu] = rx.digit(b, mu);
    }
    visit(sa, sb, v);
  });
}

CorrelationTensorSet correlation_tensors(const NetworkState& state, int max_order) {
  if (max_order < 0 || max_order > state.nodes()) throw InvalidInput("correlation_tensors: max_order must lie in [0, N]");
  const Radix rx(state.dims());
  const auto amask = nonzero_masks(rx);
  CorrelationTensorSet out{state.dims(), {}};
  const int nodes = state.nodes();
  visit_correlations(state, rx, [&](std::int64_t a, std::int64_t b, Complex v) {
    if (std::popcount(amask[a] | amask[b]) > max_order) return;
    ProductLabel l;
    for (int mu = 0; mu < nodes; ++mu) l.entries.emplace_back(rx.digit(a, mu), rx.digit(b, mu), rx.dims[mu]);
    out.values.emplace(std::move(l), v);
  });
  return out;
}

double ClusterSumTable::total() const {
  double t = 0;
  for (double v : y) t += v;
  return t;
}

ClusterSumTable cluster_sums(const NetworkState& state) {
  const Radix rx(state.dims());
  const auto mask = nonzero_masks(rx);
  ClusterSumTable out{state.dims(), std::vector<double>(std::size_t{1} << state.nodes(), 0.0), 0};
  visit_correlations(state, rx, [&](std::int64_t a, std::int64_t b, Complex v) {
    out.y[mask[a] | mask[b]] += std::norm(v);
  });
  out.sum_rule_target = purity(state.rho()) * static_cast<double>(state.dimension());
  return out;
}

ClusterSumTable cluster_sums(const std::vector<int>& dims, const StateVector& psi, std::int64_t cap) {
  check_dims(dims, cap);
  if (psi.size() != product(dims)) throw InvalidInput("cluster_sums: state length does not match prod(dims)");
  const double norm = psi.norm();
  if (!(norm > 0) || !std::isfinite(norm)) throw InvalidInput("cluster_sums: invalid state vector");
  const StateVector v = psi / norm;
  const Radix rx(dims);
  const auto mask = nonzero_masks(rx);
  ClusterSumTable out{dims, std::vector<double>(std::size_t{1} << dims.size(), 0.0), 0};
  visit_correlations_impl(
      rx, [&](std::int64_t r, std::int64_t c) { return v[r] * std::conj(v[c]); },
      [&](std::int64_t a, std::int64_t b, Complex u) { out.y[mask[a] | mask[b]] += std::norm(u); });
  out.sum_rule_target = static_cast<double>(rx.size);
  return out;
}

Operator reduced_density(const std::vector<int>& dims, const StateVector& psi, std::uint64_t keep_mask) {
  const int nodes = static_cast<int>(dims.size());
  if (psi.size() != product(dims)) throw InvalidInput("reduced_density: state length does not match prod(dims)");
  if (nodes < 64 && (keep_mask >> nodes) != 0) throw InvalidInput("reduced_density: mask outside network");
  // Split every global index into kept and traced digits.
  std::int64_t dk = 1, dt = 1;
  for (int mu = 0; mu < nodes; ++mu) ((keep_mask >> mu) & 1u ? dk : dt) *= dims[mu];
  Operator m = Operator::Zero(dk, dt);
  for (std::int64_t i = 0; i < psi.size(); ++i) {
    std::int64_t r = i, ik = 0, it = 0, sk = 1, st = 1;
    for (int mu = nodes - 1; mu >= 0; --mu) {
      const int digit = static_cast<int>(r % dims[mu]);
      r /= dims[mu];
      if ((keep_mask >> mu) & 1u) {
        ik += digit * sk;
        sk *= dims[mu];
      } else {
        it += digit * st;
        st *= dims[mu];
      }
    }
    m(ik, it) = psi[i];
  }
  return m * m.adjoint();
}

ClusterSumTable cluster_sums_from_purities(const NetworkState& state) {
  const int nodes = state.nodes();
  const std::size_t subsets = std::size_t{1} << nodes;
  std::vector<double> weighted(subsets, 1.0);  // d_S tr{rho_S^2}
  for (std::size_t s = 1; s < subsets; ++s) {
    const Operator r = partial_trace(state.rho(), state.dims(), s);
    weighted[s] = purity(r) * static_cast<double>(r.rows());
  }
  ClusterSumTable out{state.dims(), std::vector<double>(subsets, 0.0), 0};
  for (std::size_t s = 0; s < subsets; ++s) {
    double acc = 0;
    // all T subset of S
    for (std::size_t t = s;; t = (t - 1) & s) {
      const int sign = (std::popcount(s) - std::popcount(t)) % 2 == 0 ? 1 : -1;
      acc += sign * weighted[t];
      if (t == 0) break;
    }
    out.y[s] = acc;
  }
  out.sum_rule_target = weighted[subsets - 1];
  return out;
}

double PurityReport::max_route_gap() const {
  double g = 0;
  for (const auto& c : clusters) g = std::max(g, std::abs(c.p_from_purity - c.p_from_cluster_sums));
  return g;
}

PurityReport purity_factors(const NetworkState& state) {
  if (!state.uniform())
    throw InvalidInput("purity_factors: unsupported configuration, node dimensions must be uniform");
  const int nodes = state.nodes();
  const int n = state.dims().front();
  const auto table = cluster_sums(state);
  PurityReport out;
  out.n = n;
  out.nodes = nodes;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << nodes); ++s) {
    ClusterPurity c;
    c.mask = s;
    c.size = std::popcount(s);
    const double dm = std::pow(static_cast<double>(n), c.size);
    const Operator r = partial_trace(state.rho(), state.dims(), s);
    c.p_from_purity = (dm * purity(r) - 1.0) / (dm - 1.0);
    double acc = 0;
    for (std::uint64_t t = s; t != 0; t = (t - 1) & s) acc += table.y[t];
    c.p_from_cluster_sums = acc / (dm - 1.0);
    c.entropy_bits = entropy_bits(r);
    out.clusters.push_back(c);
  }
  return out;
}

ProductTestResult product_state_test(const ClusterSumTable& table, const std::vector<std::vector<int>>& partition,
                                     double tol) {
  const int nodes = static_cast<int>(table.dims.size());
  std::vector<std::uint64_t> blocks;
  std::uint64_t covered = 0;
  for (const auto& blk : partition) {
    std::uint64_t m = 0;
    for (int mu : blk) {
      if (mu < 0 || mu >= nodes) throw InvalidInput("product_state_test: node index out of range");
      if ((covered | m) >> mu & 1u) throw InvalidInput("product_state_test: blocks overlap");
      m |= std::uint64_t{1} << mu;
    }
    if (m == 0) throw InvalidInput("product_state_test: empty block");
    covered |= m;
    blocks.push_back(m);
  }
  if (covered != (std::uint64_t{1} << nodes) - 1) throw InvalidInput("product_state_test: partition must cover all nodes");
  ProductTestResult out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << nodes); ++s) {
    int touched = 0;
    double prod = 1.0;
    for (std::uint64_t b : blocks) {
      if (s & b) ++touched;
      prod *= table.y[s & b];
    }
    if (touched < 2) continue;
    if (prod < table.y[s] - tol) {
      out.non_product = true;
      out.witness = s;
      out.product_value = prod;
      out.joint_value = table.y[s];
      return out;
    }
  }
  return out;
}

ProductTestResult product_state_test(const NetworkState& state, const std::vector<std::vector<int>>& partition,
                                     double tol) {
  return product_state_test(cluster_sums(state), partition, tol);
}

}  // namespace weylnet
