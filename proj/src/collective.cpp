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

#include "weylnet/collective.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "weylnet/linalg.hpp"

namespace weylnet {

namespace {

void check_nodes(int nodes) {
  if (nodes < 1) throw InvalidInput("collective: N must be >= 1");
  if (nodes > 10) throw CapExceeded("collective: N too large for dense operators");
}

int nodes_of(const Operator& op) {
  if (op.rows() != op.cols()) throw InvalidInput("collective: operator must be square");
  int nodes = 0;
  std::int64_t d = 1;
  while (d < op.rows()) {
    d *= 2;
    ++nodes;
  }
  if (d != op.rows() || nodes < 1) throw InvalidInput("collective: dimension must be 2^N");
  return nodes;
}

// Image of basis state |k> (k = 0, 1) under a site operator: row and value,
// value 0 when the column is empty.
struct SiteColumn {
  int row;
  Complex value;
};

SiteColumn site_column(Site s, int k) {
  const Complex i(0, 1);
  switch (s) {
    case Site::X: return {1 - k, 1.0};
    case Site::Y: return k == 0 ? SiteColumn{1, -i} : SiteColumn{0, i};
    case Site::Z: return {k, k == 0 ? -1.0 : 1.0};
    case Site::I: return {k, 1.0};
    case Site::plus: return k == 0 ? SiteColumn{1, 2.0} : SiteColumn{0, 0.0};
    case Site::minus: return k == 1 ? SiteColumn{0, 2.0} : SiteColumn{1, 0.0};
  }
  return {k, 0.0};
}

// Visits (row, column, value) of every nonzero entry of a site string.
template <typename F>
void for_each_entry(const std::vector<Site>& sites, F&& f) {
  const int nodes = static_cast<int>(sites.size());
  const std::int64_t d = std::int64_t{1} << nodes;
  for (std::int64_t k = 0; k < d; ++k) {
    std::int64_t row = 0;
    Complex v = 1.0;
    for (int mu = 0; mu < nodes; ++mu) {
      const int bit = static_cast<int>((k >> (nodes - 1 - mu)) & 1);
      const auto c = site_column(sites[mu], bit);
      v *= c.value;
      row |= static_cast<std::int64_t>(c.row) << (nodes - 1 - mu);
    }
    if (v != Complex(0, 0)) f(row, k, v);
  }
}

// tr{op S^dagger}
Complex overlap(const Operator& op, const std::vector<Site>& sites) {
  Complex acc = 0;
  for_each_entry(sites, [&](std::int64_t r, std::int64_t k, Complex v) { acc += op(r, k) * std::conj(v); });
  return acc;
}

void accumulate(Operator& m, const std::vector<Site>& sites, Complex w) {
  for_each_entry(sites, [&](std::int64_t r, std::int64_t k, Complex v) { m(r, k) += w * v; });
}

// Hilbert-Schmidt norm squared of a site string divided by 2^N.
double weight(const std::vector<Site>& sites) {
  double w = 1;
  for (Site s : sites)
    if (s == Site::plus || s == Site::minus) w *= 2;
  return w;
}

void permutations_rec(std::vector<Site>& cur, std::array<int, 4>& left, const std::array<Site, 4>& alphabet,
                      std::vector<std::vector<Site>>& out, std::size_t nodes) {
  if (cur.size() == nodes) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c < 4; ++c) {
    if (left[c] == 0) continue;
    --left[c];
    cur.push_back(alphabet[c]);
    permutations_rec(cur, left, alphabet, out, nodes);
    cur.pop_back();
    ++left[c];
  }
}

// All strings over the ordered alphabet, in lexicographic order, accepted by keep.
template <typename Keep>
std::vector<std::vector<Site>> filtered_strings(int nodes, const std::array<Site, 4>& alphabet, Keep&& keep) {
  std::vector<std::vector<Site>> out;
  std::vector<Site> cur(nodes, alphabet[0]);
  std::vector<int> digit(nodes, 0);
  while (true) {
    for (int mu = 0; mu < nodes; ++mu) cur[mu] = alphabet[digit[mu]];
    if (keep(cur)) out.push_back(cur);
    int mu = nodes - 1;
    while (mu >= 0 && digit[mu] == 3) digit[mu--] = 0;
    if (mu < 0) break;
    ++digit[mu];
  }
  return out;
}

constexpr std::array<Site, 4> kPauliAlphabet = {Site::X, Site::Y, Site::Z, Site::I};
constexpr std::array<Site, 4> kLadderAlphabet = {Site::plus, Site::minus, Site::Z, Site::I};

int count_of(const std::vector<Site>& s, Site x) { return static_cast<int>(std::count(s.begin(), s.end(), x)); }

// Phase-weighted sum over one class of strings.
Operator class_operator(const std::vector<std::vector<Site>>& strings, std::int64_t b, int nodes) {
  const std::int64_t d = std::int64_t{1} << nodes;
  const auto omega = static_cast<int>(strings.size());
  Operator m = Operator::Zero(d, d);
  for (std::size_t p = 0; p < strings.size(); ++p)
    accumulate(m, strings[p], root_of_unity(omega, static_cast<long long>(p) * b));
  return m;
}

// Inverse phase sums of the selective coefficients 2^N c_p within a class.
std::vector<Complex> class_coefficients(const Operator& op, const std::vector<std::vector<Site>>& strings) {
  const auto omega = static_cast<int>(strings.size());
  std::vector<Complex> c(strings.size());
  for (std::size_t p = 0; p < strings.size(); ++p) c[p] = overlap(op, strings[p]) / weight(strings[p]);
  std::vector<Complex> out(strings.size(), 0.0);
  for (int b = 0; b < omega; ++b) {
    Complex acc = 0;
    for (int p = 0; p < omega; ++p) acc += std::conj(root_of_unity(omega, static_cast<long long>(p) * b)) * c[p];
    out[b] = acc / static_cast<double>(omega);
  }
  return out;
}

}  // namespace

Operator site_matrix(Site s) {
  Operator m = Operator::Zero(2, 2);
  for (int k = 0; k < 2; ++k) {
    const auto c = site_column(s, k);
    m(c.row, k) += c.value;
  }
  return m;
}

char site_char(Site s) {
  switch (s) {
    case Site::X: return 'X';
    case Site::Y: return 'Y';
    case Site::Z: return 'Z';
    case Site::I: return 'I';
    case Site::plus: return '+';
    case Site::minus: return '-';
  }
  return '?';
}

Operator selective_operator(const std::vector<Site>& sites) {
  check_nodes(static_cast<int>(sites.size()));
  const std::int64_t d = std::int64_t{1} << sites.size();
  Operator m = Operator::Zero(d, d);
  accumulate(m, sites, 1.0);
  return m;
}

std::int64_t omega_count(int nodes, int alpha, int beta, int gamma) {
  if (alpha < 0 || beta < 0 || gamma < 0 || alpha + beta + gamma > nodes)
    throw InvalidInput("omega_count: multiplicities must be non-negative with sum <= N");
  // product of binomials avoids factorial overflow
  auto binom = [](std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  return binom(nodes, alpha) * binom(nodes - alpha, beta) * binom(nodes - alpha - beta, gamma);
}

std::vector<std::vector<Site>> placements(int nodes, int alpha, int beta, int gamma) {
  check_nodes(nodes);
  omega_count(nodes, alpha, beta, gamma);
  std::array<int, 4> left = {alpha, beta, gamma, nodes - alpha - beta - gamma};
  std::vector<std::vector<Site>> out;
  std::vector<Site> cur;
  permutations_rec(cur, left, kPauliAlphabet, out, static_cast<std::size_t>(nodes));
  return out;
}

std::string to_string(const CollectiveLabel& l) {
  return "E" + std::to_string(l.alpha) + std::to_string(l.beta) + std::to_string(l.gamma) + "," + std::to_string(l.b);
}

std::vector<CollectiveLabel> collective_labels(int nodes, bool b0_only) {
  check_nodes(nodes);
  std::vector<CollectiveLabel> out;
  for (int a = 0; a <= nodes; ++a)
    for (int be = 0; a + be <= nodes; ++be)
      for (int g = 0; a + be + g <= nodes; ++g) {
        const auto omega = b0_only ? 1 : omega_count(nodes, a, be, g);
        for (std::int64_t b = 0; b < omega; ++b) out.push_back({a, be, g, b});
      }
  return out;
}

Operator collective_operator(int nodes, const CollectiveLabel& label) {
  const auto omega = omega_count(nodes, label.alpha, label.beta, label.gamma);
  if (label.b < 0 || label.b >= omega) throw InvalidInput("collective_operator: b must lie in [0, Omega)");
  return class_operator(placements(nodes, label.alpha, label.beta, label.gamma), label.b, nodes);
}

Operator selective_from_collective(int nodes, int alpha, int beta, int gamma, std::int64_t p0) {
  const auto omega = omega_count(nodes, alpha, beta, gamma);
  if (p0 < 0 || p0 >= omega) throw InvalidInput("selective_from_collective: p0 must lie in [0, Omega)");
  const std::int64_t d = std::int64_t{1} << nodes;
  Operator m = Operator::Zero(d, d);
  for (std::int64_t b = 0; b < omega; ++b)
    m += std::conj(root_of_unity(static_cast<int>(omega), b * p0)) * collective_operator(nodes, {alpha, beta, gamma, b});
  return m / static_cast<double>(omega);
}

Complex CollectiveDecomposition::at(const CollectiveLabel& l) const {
  const auto it = values.find(l);
  if (it == values.end()) throw InvalidInput("collective coefficient not present: " + to_string(l));
  return it->second;
}

CollectiveDecomposition decompose_collective(const Operator& op, int nodes) {
  check_nodes(nodes);
  if (op.rows() != (std::int64_t{1} << nodes) || op.cols() != op.rows())
    throw InvalidInput("decompose_collective: dimension must be 2^N");
  CollectiveDecomposition out;
  out.nodes = nodes;
  for (int a = 0; a <= nodes; ++a)
    for (int be = 0; a + be <= nodes; ++be)
      for (int g = 0; a + be + g <= nodes; ++g) {
        const auto c = class_coefficients(op, placements(nodes, a, be, g));
        for (std::size_t b = 0; b < c.size(); ++b) out.values[{a, be, g, static_cast<std::int64_t>(b)}] = c[b];
      }
  return out;
}

CollectiveDecomposition decompose_collective(const NetworkState& state) {
  for (int n : state.dims())
    if (n != 2) throw InvalidInput("decompose_collective: unsupported configuration, nodes must be two-level");
  return decompose_collective(state.rho(), state.nodes());
}

Operator reconstruct(const CollectiveDecomposition& d) {
  const std::int64_t dim = std::int64_t{1} << d.nodes;
  Operator m = Operator::Zero(dim, dim);
  for (const auto& [label, v] : d.values)
    if (v != Complex(0, 0)) m += v * collective_operator(d.nodes, label);
  return m / static_cast<double>(dim);
}

std::vector<std::vector<Site>> f_strings(int nodes, int z, int gamma) {
  check_nodes(nodes);
  return filtered_strings(nodes, kLadderAlphabet, [&](const std::vector<Site>& s) {
    return count_of(s, Site::Z) == gamma && count_of(s, Site::plus) - count_of(s, Site::minus) == z;
  });
}

std::vector<std::vector<Site>> g_strings(int nodes, int m) {
  check_nodes(nodes);
  return filtered_strings(nodes, kPauliAlphabet,
                          [&](const std::vector<Site>& s) { return nodes - count_of(s, Site::I) == m; });
}

Operator f_operator(int nodes, const FLabel& label) {
  const auto strings = f_strings(nodes, label.z, label.gamma);
  if (strings.empty()) throw InvalidInput("f_operator: empty class");
  if (label.b < 0 || label.b >= static_cast<std::int64_t>(strings.size()))
    throw InvalidInput("f_operator: b out of range");
  return class_operator(strings, label.b, nodes);
}

Operator g_operator(int nodes, const GLabel& label) {
  const auto strings = g_strings(nodes, label.m);
  if (strings.empty()) throw InvalidInput("g_operator: empty class");
  if (label.b < 0 || label.b >= static_cast<std::int64_t>(strings.size()))
    throw InvalidInput("g_operator: b out of range");
  return class_operator(strings, label.b, nodes);
}

std::map<FLabel, Complex> decompose_f(const Operator& op, int nodes) {
  if (nodes_of(op) != nodes) throw InvalidInput("decompose_f: dimension must be 2^N");
  std::map<FLabel, Complex> out;
  for (int gamma = 0; gamma <= nodes; ++gamma)
    for (int z = -(nodes - gamma); z <= nodes - gamma; ++z) {
      const auto c = class_coefficients(op, f_strings(nodes, z, gamma));
      for (std::size_t b = 0; b < c.size(); ++b) out[{z, gamma, static_cast<std::int64_t>(b)}] = c[b];
    }
  return out;
}

std::map<GLabel, Complex> decompose_g(const Operator& op, int nodes) {
  if (nodes_of(op) != nodes) throw InvalidInput("decompose_g: dimension must be 2^N");
  std::map<GLabel, Complex> out;
  for (int m = 0; m <= nodes; ++m) {
    const auto c = class_coefficients(op, g_strings(nodes, m));
    for (std::size_t b = 0; b < c.size(); ++b) out[{m, static_cast<std::int64_t>(b)}] = c[b];
  }
  return out;
}

Operator reconstruct_f(const std::map<FLabel, Complex>& coeffs, int nodes) {
  const std::int64_t dim = std::int64_t{1} << nodes;
  Operator m = Operator::Zero(dim, dim);
  for (const auto& [l, v] : coeffs)
    if (v != Complex(0, 0)) m += v * f_operator(nodes, l);
  return m / static_cast<double>(dim);
}

Operator reconstruct_g(const std::map<GLabel, Complex>& coeffs, int nodes) {
  const std::int64_t dim = std::int64_t{1} << nodes;
  Operator m = Operator::Zero(dim, dim);
  for (const auto& [l, v] : coeffs)
    if (v != Complex(0, 0)) m += v * g_operator(nodes, l);
  return m / static_cast<double>(dim);
}

std::int64_t count_parameters(ParameterFamily family, int nodes) {
  if (nodes < 1) throw InvalidInput("count_parameters: N must be >= 1");
  const std::int64_t n = nodes;
  switch (family) {
    case ParameterFamily::E0: return (n + 1) * (n + 2) * (n + 3) / 6;
    case ParameterFamily::F0: return (n + 1) * (n + 1);
    case ParameterFamily::G0: return n + 1;
  }
  return 0;
}

std::int64_t enumerate_parameters(ParameterFamily family, int nodes) {
  check_nodes(nodes);
  switch (family) {
    case ParameterFamily::E0: return static_cast<std::int64_t>(collective_labels(nodes, true).size());
    case ParameterFamily::F0: {
      std::set<std::pair<int, int>> classes;
      filtered_strings(nodes, kLadderAlphabet, [&](const std::vector<Site>& s) {
        classes.insert({count_of(s, Site::plus) - count_of(s, Site::minus), count_of(s, Site::Z)});
        return false;
      });
      return static_cast<std::int64_t>(classes.size());
    }
    case ParameterFamily::G0: {
      std::set<int> classes;
      filtered_strings(nodes, kPauliAlphabet, [&](const std::vector<Site>& s) {
        classes.insert(nodes - count_of(s, Site::I));
        return false;
      });
      return static_cast<std::int64_t>(classes.size());
    }
  }
  return 0;
}

Operator model_hamiltonian(Model model, const ModelParams& p) {
  auto e = [](int a, int b, int g, std::int64_t k) { return collective_operator(2, {a, b, g, k}); };
  switch (model) {
    case Model::foerster: return (p.omega / 2) * e(0, 0, 1, 0) + (p.c_f / 2) * (e(2, 0, 0, 0) + e(0, 2, 0, 0));
    case Model::renormalization:
      return ((p.omega1 + p.omega2) / 4) * e(0, 0, 1, 0) + ((p.omega1 - p.omega2) / 4) * e(0, 0, 1, 1) +
             (p.c_r / 2) * e(0, 0, 2, 0);
    case Model::stimulation: return (p.g / 2) * e(1, 0, 0, 0) + (p.delta / 2) * e(0, 0, 1, 0);
  }
  throw InvalidInput("model_hamiltonian: unknown model");
}

Complex InvariantExpression::evaluate(const CollectiveDecomposition& d) const {
  Complex acc = 0;
  for (const auto& t : terms) acc += t.coefficient * d.at(t.label);
  return acc;
}

InvariantSet hamiltonian_invariants(Model model, const ModelParams& p) {
  auto term = [](double c, int a, int b, int g, std::int64_t k) { return InvariantTerm{c, {a, b, g, k}}; };
  switch (model) {
    case Model::foerster:
      return {{"E001,0", {term(1, 0, 0, 1, 0)}},
              {"E002,0", {term(1, 0, 0, 2, 0)}},
              {"E200,0+E020,0", {term(1, 2, 0, 0, 0), term(1, 0, 2, 0, 0)}}};
    case Model::renormalization:
      return {{"E001,0", {term(1, 0, 0, 1, 0)}}, {"E002,0", {term(1, 0, 0, 2, 0)}}, {"E001,1", {term(1, 0, 0, 1, 1)}}};
    case Model::stimulation: {
      const double g = p.g, d = p.delta, s = g * g + d * d;
      return {{"linear", {term(d, 0, 0, 1, 0), term(g, 1, 0, 0, 0)}},
              {"quadratic", {term(d * d, 0, 0, 2, 0), term(2 * g * d, 1, 0, 1, 0), term(g * g, 2, 0, 0, 0)}},
              {"cubic",
               {term(4 * d * d * s, 0, 0, 1, 1), term(-g * g * g * g, 0, 0, 2, 0), term(-g * g * s, 0, 2, 0, 0),
                term(4 * g * d * s, 1, 0, 0, 1), term(2 * g * g * g * d, 1, 0, 1, 0), term(-g * g * d * d, 2, 0, 0, 0)}}};
    }
  }
  throw InvalidInput("hamiltonian_invariants: unknown model");
}

InvariantDrift verify_invariants(const InvariantSet& set, const Operator& h, const Operator& rho0, double t_final,
                                 int steps) {
  const int nodes = nodes_of(h);
  if (rho0.rows() != h.rows() || rho0.cols() != h.cols()) throw InvalidInput("verify_invariants: dimension mismatch");
  if (!is_hermitian(h, kDefaultTolerances.matrix)) throw InvalidInput("verify_invariants: H is not hermitian");
  if (steps < 1 || !(t_final >= 0)) throw InvalidInput("verify_invariants: invalid time grid");
  InvariantDrift out;
  const auto d0 = decompose_collective(rho0, nodes);
  std::vector<Complex> v0;
  for (const auto& e : set) {
    out.names.push_back(e.name);
    v0.push_back(e.evaluate(d0));
    out.initial.push_back(v0.back().real());
    out.drift.push_back(0);
  }
  for (int k = 1; k <= steps; ++k) {
    const double t = t_final * k / steps;
    const Operator u = unitary_propagator(h, t);
    const Operator rho = u * rho0 * u.adjoint();
    const auto d = decompose_collective(rho, nodes);
    for (std::size_t i = 0; i < set.size(); ++i)
      out.drift[i] = std::max(out.drift[i], std::abs(set[i].evaluate(d) - v0[i]));
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    if (out.drift[i] >= out.max_drift) {
      out.max_drift = out.drift[i];
      out.worst = out.names[i];
    }
  return out;
}

}  // namespace weylnet
