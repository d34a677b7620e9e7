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

#include "weylnet/commuting_sets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "weylnet/cat_states.hpp"
#include "weylnet/linalg.hpp"

namespace weylnet {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_params(int n, int nodes) {
  if (n < 2) throw InvalidInput("commuting sets: n must be >= 2");
  if (nodes < 1) throw InvalidInput("commuting sets: N must be >= 1");
  if (nodes > 16) throw CapExceeded("commuting sets: N too large");
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Labels as digit strings (a_0, b_0, a_1, b_1, ...) read as base-n codes,
// node 0 most significant. Code order is label order.
struct LabelSpace {
  int n;
  int nodes;
  std::int64_t size;  // n^{2N}

  LabelSpace(int n_, int nodes_) : n(n_), nodes(nodes_), size(ipow(n_, 2 * nodes_)) {}

  std::vector<int> digits(std::int64_t code) const {
    std::vector<int> d(2 * nodes);
    for (int i = 2 * nodes - 1; i >= 0; --i) {
      d[i] = static_cast<int>(code % n);
      code /= n;
    }
    return d;
  }
  std::int64_t encode(const std::vector<int>& d) const {
    std::int64_t c = 0;
    for (int v : d) c = c * n + v;
    return c;
  }
  std::int64_t encode(const ProductLabel& l) const {
    std::int64_t c = 0;
    for (const auto& e : l.entries) c = (c * n + e.a()) * n + e.b();
    return c;
  }
  ProductLabel label(const std::vector<int>& d) const {
    ProductLabel l;
    for (int mu = 0; mu < nodes; ++mu) l.entries.emplace_back(d[2 * mu], d[2 * mu + 1], n);
    return l;
  }
  std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) const {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % n;
    return r;
  }
  int form(const std::vector<int>& x, const std::vector<int>& y) const {
    long long s = 0;
    for (int mu = 0; mu < nodes; ++mu) s += x[2 * mu] * y[2 * mu + 1] - x[2 * mu + 1] * y[2 * mu];
    return positive_mod(s, n);
  }
  bool full_support(const std::vector<int>& x) const {
    for (int mu = 0; mu < nodes; ++mu)
      if (x[2 * mu] == 0 && x[2 * mu + 1] == 0) return false;
    return true;
  }
};

// Subgroup of Z_n^{2N} grown one generator at a time.
struct IndexGroup {
  const LabelSpace& space;
  std::vector<char> member;
  std::vector<std::vector<int>> elements;
  std::vector<std::vector<int>> generators;

  explicit IndexGroup(const LabelSpace& s) : space(s), member(static_cast<std::size_t>(s.size), 0) {
    elements.push_back(std::vector<int>(2 * s.nodes, 0));
    member[0] = 1;
  }
  bool contains(const std::vector<int>& x) const { return member[space.encode(x)] != 0; }
  bool commutes_with_generators(const std::vector<int>& x) const {
    for (const auto& g : generators)
      if (space.form(x, g) != 0) return false;
    return true;
  }
  // New elements x + k g that g would add.
  std::vector<std::vector<int>> coset_closure(const std::vector<int>& g) const {
    std::vector<std::vector<int>> added;
    std::unordered_set<std::int64_t> marks;
    auto fresh = [&](const std::vector<int>& y) {
      const auto c = space.encode(y);
      return member[c] == 0 && marks.insert(c).second;
    };
    // Walk G + g, G + 2g, ... until the multiples of g fall back into G.
    std::vector<int> mult = g;
    while (!contains(mult)) {
      bool any = false;
      for (const auto& x : elements) {
        auto y = space.add(x, mult);
        if (fresh(y)) {
          added.push_back(std::move(y));
          any = true;
        }
      }
      if (!any) break;
      mult = space.add(mult, g);
    }
    return added;
  }
  bool add_generator(const std::vector<int>& g) {
    if (contains(g)) return false;
    auto added = coset_closure(g);
    for (auto& y : added) {
      member[space.encode(y)] = 1;
      elements.push_back(std::move(y));
    }
    generators.push_back(g);
    return true;
  }
};

CommutingSet make_set(int n, int nodes, SetMethod m, std::vector<ProductLabel> members) {
  CommutingSet s;
  s.n = n;
  s.nodes = nodes;
  s.method = m;
  s.members = std::move(members);
  return s;
}

// Applies the product operator of a label to a state vector.
StateVector apply_label(const ProductLabel& l, const StateVector& psi) {
  const int nodes = static_cast<int>(l.entries.size());
  const int n = l.entries.front().n();
  const std::int64_t d = psi.size();
  StateVector out(d);
  std::vector<Complex> w(n);
  for (int j = 0; j < n; ++j) w[j] = root_of_unity(n, j);
  for (std::int64_t k = 0; k < d; ++k) {
    std::int64_t r = k, row = 0, stride = 1;
    long long phase = 0;
    for (int mu = nodes - 1; mu >= 0; --mu) {
      const int km = static_cast<int>(r % n);
      r /= n;
      row += ((km + l.entries[mu].a()) % n) * stride;
      phase += static_cast<long long>(l.entries[mu].b()) * km;
      stride *= n;
    }
    out[row] = w[positive_mod(phase, n)] * psi[k];
  }
  return out;
}

// Tomita-style maximum clique search on a bitset graph.
class CliqueSearch {
 public:
  CliqueSearch(std::size_t vertices, std::uint64_t budget)
      : v_(vertices), w_((vertices + 63) / 64), adj_(v_ * w_, 0), budget_(budget) {}

  void connect(std::size_t i, std::size_t j) {
    adj_[i * w_ + j / 64] |= std::uint64_t{1} << (j % 64);
    adj_[j * w_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void set_incumbent(std::vector<int> clique) { best_ = std::move(clique); }

  // Searches cliques containing `forced`.
  void run(const std::vector<int>& forced) {
    std::vector<std::uint64_t> p(w_, ~std::uint64_t{0});
    if (v_ % 64) p[w_ - 1] = (std::uint64_t{1} << (v_ % 64)) - 1;
    for (int f : forced)
      for (std::size_t k = 0; k < w_; ++k) p[k] &= adj_[f * w_ + k];
    std::vector<int> r = forced;
    expand(r, p);
  }

  const std::vector<int>& best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::uint64_t expansions() const { return expansions_; }

 private:
  void expand(std::vector<int>& r, std::vector<std::uint64_t> p) {
    if (aborted_) return;
    if (++expansions_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<int> order, color;
    {
      std::vector<std::uint64_t> u = p;
      int c = 0;
      auto nonempty = [&](const std::vector<std::uint64_t>& s) {
        return std::any_of(s.begin(), s.end(), [](std::uint64_t x) { return x != 0; });
      };
      while (nonempty(u)) {
        ++c;
        std::vector<std::uint64_t> q = u;
        for (std::size_t k = 0; k < w_; ++k) {
          while (q[k]) {
            const int bit = std::countr_zero(q[k]);
            const std::size_t v = k * 64 + bit;
            q[k] &= q[k] - 1;
            u[k] &= ~(std::uint64_t{1} << bit);
            for (std::size_t j = k; j < w_; ++j) q[j] &= ~adj_[v * w_ + j];
            order.push_back(static_cast<int>(v));
            color.push_back(c);
          }
        }
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (r.size() + color[i] <= best_.size()) return;
      const int v = order[i];
      r.push_back(v);
      std::vector<std::uint64_t> np(w_);
      bool empty = true;
      for (std::size_t k = 0; k < w_; ++k) {
        np[k] = p[k] & adj_[v * w_ + k];
        empty = empty && np[k] == 0;
      }
      if (empty) {
        if (r.size() > best_.size()) best_ = r;
      } else {
        expand(r, std::move(np));
      }
      r.pop_back();
      if (aborted_) return;
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::size_t v_, w_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool aborted_ = false;
  std::vector<int> best_;
};

}  // namespace

std::string to_string(SetMethod m) {
  switch (m) {
    case SetMethod::A: return "A";
    case SetMethod::B: return "B";
    case SetMethod::cat: return "cat";
    case SetMethod::c_exact: return "C-exact";
    case SetMethod::c_heuristic: return "C-heuristic";
  }
  return "?";
}

int symplectic_form(const ProductLabel& x, const ProductLabel& y) {
  if (x.entries.size() != y.entries.size()) throw InvalidInput("symplectic_form: labels differ in length");
  if (x.entries.empty()) return 0;
  const int n = x.entries.front().n();
  long long s = 0;
  for (std::size_t mu = 0; mu < x.entries.size(); ++mu) {
    const auto& p = x.entries[mu];
    const auto& q = y.entries[mu];
    if (p.n() != n || q.n() != n) throw InvalidInput("symplectic_form: node dimensions must agree");
    s += static_cast<long long>(p.a()) * q.b() - static_cast<long long>(p.b()) * q.a();
  }
  return positive_mod(s, n);
}

bool commute_check(const ProductLabel& x, const ProductLabel& y) { return symplectic_form(x, y) == 0; }

int partner_count(const WeylIndex& w) {
  const int n = w.n();
  int count = 0;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if (weyl_commute(w, WeylIndex(c, d, n))) ++count;
  return count;
}

int partner_count_formula(const WeylIndex& w) {
  return w.n() * std::gcd(std::gcd(w.a(), w.b()), w.n());
}

bool pairwise_commuting(const std::vector<ProductLabel>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!commute_check(members[i], members[j])) return false;
  return true;
}

bool pairwise_commuting_matrix(const std::vector<ProductLabel>& members, double tol) {
  std::vector<Operator> mats;
  for (const auto& m : members) mats.push_back(cluster_operator(m));
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if ((mats[i] * mats[j] - mats[j] * mats[i]).norm() >= tol) return false;
  return true;
}

CommutingSet construct_method_A(int n, int nodes) {
  check_params(n, nodes);
  std::vector<ProductLabel> out;
  std::vector<int> a(nodes, 1);
  while (true) {
    ProductLabel l;
    for (int mu = 0; mu < nodes; ++mu) l.entries.emplace_back(a[mu], 0, n);
    out.push_back(std::move(l));
    int mu = nodes - 1;
    while (mu >= 0 && a[mu] == n - 1) a[mu--] = 1;
    if (mu < 0) break;
    ++a[mu];
  }
  return make_set(n, nodes, SetMethod::A, std::move(out));
}

CommutingSet construct_method_B(int n, int nodes) {
  check_params(n, nodes);
  const int pairs = nodes / 2;
  const bool odd = nodes % 2 == 1;
  // per pair: single indices s = n a + b in [1, n^2); last odd node: c in [1, n)
  std::vector<int> s(pairs, 1);
  int c = 1;
  std::vector<ProductLabel> out;
  while (true) {
    ProductLabel l;
    for (int k = 0; k < pairs; ++k) {
      const int a = s[k] / n, b = s[k] % n;
      l.entries.emplace_back(a, b, n);
      l.entries.emplace_back(b, a, n);
    }
    if (odd) l.entries.emplace_back(c, 0, n);
    out.push_back(std::move(l));
    // advance mixed counter, last digit fastest
    if (odd && c < n - 1) {
      ++c;
      continue;
    }
    c = 1;
    int k = pairs - 1;
    while (k >= 0 && s[k] == n * n - 1) s[k--] = 1;
    if (k < 0) break;
    ++s[k];
  }
  return make_set(n, nodes, SetMethod::B, std::move(out));
}

CommutingSet construct_cat_stabilizers(int n, int nodes) {
  check_params(n, nodes);
  std::vector<ProductLabel> out;
  for (int a = 0; a < n; ++a) {
    // b digits: all entries non-identity, sum b = 0 mod n
    std::vector<int> b(nodes, 0);
    while (true) {
      bool ok = true;
      long long sum = 0;
      for (int mu = 0; mu < nodes; ++mu) {
        if (a == 0 && b[mu] == 0) ok = false;
        sum += b[mu];
      }
      if (ok && sum % n == 0) {
        ProductLabel l;
        for (int mu = 0; mu < nodes; ++mu) l.entries.emplace_back(a, b[mu], n);
        out.push_back(std::move(l));
      }
      int mu = nodes - 1;
      while (mu >= 0 && b[mu] == n - 1) b[mu--] = 0;
      if (mu < 0) break;
      ++b[mu];
    }
  }
  return make_set(n, nodes, SetMethod::cat, std::move(out));
}

std::int64_t bound_D(int n, int nodes) {
  check_params(n, nodes);
  return ipow(n, nodes) - 1;
}

CommutingSet greedy_extend(const CommutingSet& set) {
  check_params(set.n, set.nodes);
  const LabelSpace space(set.n, set.nodes);
  if (space.size > (std::int64_t{1} << 24)) throw CapExceeded("greedy_extend: label space too large");
  IndexGroup group(space);
  std::vector<char> in_set(static_cast<std::size_t>(space.size), 0);
  for (const auto& m : set.members) {
    group.add_generator(space.digits(space.encode(m)));
    in_set[space.encode(m)] = 1;
  }
  CommutingSet out = set;
  for (std::int64_t code = 0; code < space.size; ++code) {
    if (in_set[code]) continue;
    auto d = space.digits(code);
    if (!space.full_support(d) || !group.commutes_with_generators(d)) continue;
    out.members.push_back(space.label(d));
    in_set[code] = 1;
    group.add_generator(d);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

CommutingSet search_max_commuting(int n, int nodes, const SearchOptions& opt) {
  check_params(n, nodes);
  std::vector<CommutingSet> seeds = {construct_method_A(n, nodes), construct_method_B(n, nodes),
                                     construct_cat_stabilizers(n, nodes)};
  const std::int64_t vertices = ipow(n * n - 1, nodes);
  if (vertices > static_cast<std::int64_t>(opt.max_vertices)) {
    CommutingSet best;
    for (const auto& s : seeds) {
      auto e = greedy_extend(s);
      if (best.members.empty() || e.size() > best.size()) best = std::move(e);
    }
    best.method = SetMethod::c_heuristic;
    return best;
  }
  const LabelSpace space(n, nodes);
  std::vector<std::vector<int>> verts;
  std::vector<std::int64_t> index_of(static_cast<std::size_t>(space.size), -1);
  for (std::int64_t code = 0; code < space.size; ++code) {
    auto d = space.digits(code);
    if (!space.full_support(d)) continue;
    index_of[code] = static_cast<std::int64_t>(verts.size());
    verts.push_back(std::move(d));
  }
  CliqueSearch search(verts.size(), opt.budget);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (space.form(verts[i], verts[j]) == 0) search.connect(i, j);

  std::vector<int> incumbent;
  for (const auto& s : seeds) {
    if (s.size() <= incumbent.size()) continue;
    incumbent.clear();
    for (const auto& m : s.members) incumbent.push_back(static_cast<int>(index_of[space.encode(m)]));
  }
  search.set_incumbent(incumbent);
  std::vector<int> forced;
  if (opt.fix_first_vertex && is_prime(n)) forced.push_back(0);
  search.run(forced);

  CommutingSet out;
  out.n = n;
  out.nodes = nodes;
  out.method = search.aborted() ? SetMethod::c_heuristic : SetMethod::c_exact;
  out.expansions = search.expansions();
  for (int v : search.best()) out.members.push_back(space.label(verts[v]));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

CommonEigenstate common_eigenstate(const CommutingSet& set, std::uint64_t seed, std::int64_t cap) {
  check_params(set.n, set.nodes);
  if (!pairwise_commuting(set.members)) throw InvalidInput("common_eigenstate: set is not pairwise commuting");
  const LabelSpace space(set.n, set.nodes);
  const std::int64_t dim = ipow(set.n, set.nodes);
  if (dim > cap) throw CapExceeded("common_eigenstate: dimension exceeds cap");
  if (space.size > (std::int64_t{1} << 24)) throw CapExceeded("common_eigenstate: label space too large");

  IndexGroup group(space);
  for (const auto& m : set.members) group.add_generator(space.digits(space.encode(m)));

  // Greedy completion: earliest commuting label, preferring ones that add no
  // new pure N-cluster members.
  while (static_cast<std::int64_t>(group.elements.size()) < dim) {
    std::vector<int> fallback;
    std::vector<int> chosen;
    for (std::int64_t code = 1; code < space.size; ++code) {
      if (group.member[code]) continue;
      auto d = space.digits(code);
      if (!group.commutes_with_generators(d)) continue;
      const auto added = group.coset_closure(d);
      const bool clean = std::none_of(added.begin(), added.end(),
                                      [&](const std::vector<int>& y) { return space.full_support(y); });
      if (clean) {
        chosen = std::move(d);
        break;
      }
      if (fallback.empty()) fallback = std::move(d);
    }
    if (chosen.empty()) chosen = std::move(fallback);
    if (chosen.empty()) break;
    group.add_generator(chosen);
  }

  CommonEigenstate out;
  out.target_size = static_cast<std::size_t>(dim);
  out.complete = static_cast<std::int64_t>(group.elements.size()) == dim;
  std::vector<std::vector<int>> sorted = group.elements;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& e : sorted) {
    out.completion.push_back(space.label(e));
    if (space.full_support(e)) ++out.full_support_count;
  }
  for (const auto& g : group.generators) out.generators.push_back(space.label(g));

  std::vector<Operator> gens;
  for (const auto& g : out.generators) gens.push_back(cluster_operator(g));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const Complex i_unit(0, 1);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Operator h = Operator::Zero(dim, dim);
    for (const auto& u : gens) {
      const Operator ud = u.adjoint();
      h += normal(rng) * (u + ud) / 2.0 + normal(rng) * (u - ud) / (2.0 * i_unit);
    }
    Eigen::SelfAdjointEigenSolver<Operator> es(h);
    const double gap = dim > 1 ? es.eigenvalues()[1] - es.eigenvalues()[0] : 1.0;
    if (gap < 1e-8 && out.complete && attempt + 1 < 32) continue;
    out.vector = es.eigenvectors().col(0);
    break;
  }
  for (const auto& l : out.completion) {
    const StateVector u = apply_label(l, out.vector);
    const Complex lambda = out.vector.dot(u);
    out.max_residual = std::max(out.max_residual, (u - lambda * out.vector).norm());
  }
  return out;
}

TableRow table_row(int n, int nodes, const SearchOptions& opt) {
  check_params(n, nodes);
  TableRow r;
  r.n = n;
  r.nodes = nodes;
  r.a = ipow(n - 1, nodes);
  r.b = nodes % 2 == 0 ? ipow(n * n - 1, nodes / 2) : ipow(n * n - 1, nodes / 2) * (n - 1);
  const auto c = search_max_commuting(n, nodes, opt);
  r.c = static_cast<std::int64_t>(c.size());
  r.c_exact = c.method == SetMethod::c_exact;
  r.d = bound_D(n, nodes);
  r.cat = cat_cluster_sum(n, nodes, nodes);
  return r;
}

}  // namespace weylnet
