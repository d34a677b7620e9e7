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

#include "weylnet/cat_states.hpp"

#include <bit>
#include <cmath>

#include "weylnet/linalg.hpp"

namespace weylnet {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_label(int n, const CatLabel& c) {
  if (n < 2) throw InvalidInput("cat: n must be >= 2");
  if (c.empty()) throw InvalidInput("cat: label must have at least one entry");
  if (c.size() > 30) throw CapExceeded("cat: too many nodes");
  for (int v : c)
    if (v < 0 || v >= n) throw InvalidInput("cat: label entries must lie in [0, n)");
}

}  // namespace

StateVector cat_state(int n, const CatLabel& c) {
  check_label(n, c);
  const int nodes = static_cast<int>(c.size());
  const std::int64_t d = ipow(n, nodes);
  if (d > (std::int64_t{1} << 26)) throw CapExceeded("cat: dimension too large");
  StateVector psi = StateVector::Zero(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    std::int64_t idx = j;
    for (int k = 1; k < nodes; ++k) idx = idx * n + (j + c[k]) % n;
    psi[idx] = amp * root_of_unity(n, static_cast<long long>(j) * c[0]);
  }
  return psi;
}

StateVector cat_state_from_operators(int n, const CatLabel& c) {
  check_label(n, c);
  std::vector<Operator> factors;
  factors.push_back(weyl_matrix(WeylIndex(0, c[0], n)));
  for (std::size_t k = 1; k < c.size(); ++k) factors.push_back(weyl_matrix(WeylIndex(c[k], 0, n)));
  return kron_all(factors) * cat_state(n, CatLabel(c.size(), 0));
}

std::vector<CatLabel> all_cat_labels(int n, int nodes) {
  if (n < 2 || nodes < 1) throw InvalidInput("cat: need n >= 2 and N >= 1");
  const std::int64_t total = ipow(n, nodes);
  if (total > (std::int64_t{1} << 20)) throw CapExceeded("cat: too many labels");
  std::vector<CatLabel> out;
  for (std::int64_t code = 0; code < total; ++code) {
    CatLabel c(nodes);
    std::int64_t r = code;
    for (int k = nodes - 1; k >= 0; --k) {
      c[k] = static_cast<int>(r % n);
      r /= n;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::int64_t cat_cluster_sum(int n, int m, int nodes) {
  if (n < 2 || nodes < 1 || m < 1 || m > nodes) throw InvalidInput("cat_cluster_sum: need n >= 2, 1 <= m <= N");
  const std::int64_t sign = m % 2 == 0 ? 1 : -1;
  const std::int64_t proper = (ipow(n - 1, m) + sign * (n - 1)) / n;
  return m < nodes ? proper : (n - 1) * ipow(n, nodes - 1) + proper;
}

double cat_purity_factor(int n, int m) {
  if (n < 2 || m < 1) throw InvalidInput("cat_purity_factor: need n >= 2, m >= 1");
  const double nm = std::pow(static_cast<double>(n), m);
  return (nm / n - 1.0) / (nm - 1.0);
}

CatProfile cat_profile(int n, int nodes) {
  if (n < 2 || nodes < 1) throw InvalidInput("cat_profile: need n >= 2 and N >= 1");
  CatProfile p;
  p.n = n;
  p.nodes = nodes;
  p.y.assign(nodes + 1, 1);
  p.p.assign(nodes + 1, 0.0);
  for (int m = 1; m <= nodes; ++m) {
    p.y[m] = cat_cluster_sum(n, m, nodes);
    p.p[m] = m == nodes ? 1.0 : cat_purity_factor(n, m);
  }
  return p;
}

CatReport cat_verify(int n, int nodes, const std::vector<CatLabel>& sample, std::int64_t cap) {
  if (n < 2 || nodes < 1) throw InvalidInput("cat_verify: need n >= 2 and N >= 1");
  const std::int64_t d = ipow(n, nodes);
  if (d > cap) throw CapExceeded("cat_verify: dimension exceeds cap");
  const std::vector<int> dims(nodes, n);
  const auto profile = cat_profile(n, nodes);
  CatReport rep;
  rep.n = n;
  rep.nodes = nodes;
  rep.ratio = static_cast<double>(profile.y[nodes]) / static_cast<double>(d);
  rep.ratio_limit = static_cast<double>(n - 1) / n;

  std::vector<StateVector> states;
  for (const auto& c : sample) {
    if (static_cast<int>(c.size()) != nodes) throw InvalidInput("cat_verify: label length must equal N");
    states.push_back(cat_state(n, c));
  }
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i; j < states.size(); ++j) {
      const double target = (i == j || sample[i] == sample[j]) ? 1.0 : 0.0;
      rep.max_overlap_error = std::max(rep.max_overlap_error, std::abs(std::abs(states[i].dot(states[j])) - target));
    }
  if (static_cast<std::int64_t>(states.size()) == d && d <= 1024) {
    Operator sum = Operator::Zero(d, d);
    for (const auto& s : states) sum += s * s.adjoint();
    rep.completeness_error = (sum - Operator::Identity(d, d)).norm();
  }

  const double log_n = std::log2(static_cast<double>(n));
  for (const auto& psi : states) {
    const auto table = cluster_sums(dims, psi, cap);
    for (std::uint64_t s = 1; s < table.y.size(); ++s) {
      const double expect = static_cast<double>(profile.y[std::popcount(s)]);
      rep.max_cluster_sum_error = std::max(rep.max_cluster_sum_error, std::abs(table.y[s] - expect));
    }
    // One prefix and one suffix cluster per size; all clusters of a size are
    // equivalent for cat states.
    for (int m = 1; m <= nodes; ++m) {
      const std::uint64_t prefix = (std::uint64_t{1} << m) - 1;
      const std::uint64_t suffix = prefix << (nodes - m);
      for (std::uint64_t mask : {prefix, suffix}) {
        const Operator r = reduced_density(dims, psi, mask);
        const double dm = std::pow(static_cast<double>(n), m);
        const double p = (dm * purity(r) - 1.0) / (dm - 1.0);
        rep.max_purity_error = std::max(rep.max_purity_error, std::abs(p - profile.p[m]));
        if (m < nodes) rep.max_entropy_error = std::max(rep.max_entropy_error, std::abs(entropy_bits(r) - log_n));
      }
    }
  }
  return rep;
}

CollectiveDecomposition cat_collective_decomposition(const CatLabel& c) {
  const StateVector psi = cat_state(2, c);
  return decompose_collective(psi * psi.adjoint(), static_cast<int>(c.size()));
}

std::vector<FigureRow> cat_purity_figure(int n_min, int n_max, int m_max) {
  if (n_min < 2 || n_max < n_min || m_max < 1) throw InvalidInput("cat_purity_figure: invalid ranges");
  std::vector<FigureRow> out;
  for (int n = n_min; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m) out.push_back({n, m, cat_purity_factor(n, m)});
  return out;
}

}  // namespace weylnet
