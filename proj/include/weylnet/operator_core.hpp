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

#ifndef WEYLNET_OPERATOR_CORE_HPP
#define WEYLNET_OPERATOR_CORE_HPP

// Unitary (Weyl) operator basis U_ab = sum_k omega^{bk} |k+a><k|, the
// transition operators P_ij = |i><j| and the SU(n) generators normalized to
// tr{lambda_s lambda_s'} = n delta_ss'. Everything here is header-only and
// templated on the real scalar type.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "weylnet/types.hpp"

namespace weylnet {

/// Index pair (a, b) of U_ab for a single n-level node: a shifts the state,
/// b sets the phase gradient.
class WeylIndex {
 public:
  WeylIndex() = default;
  WeylIndex(int a, int b, int n) : a_(a), b_(b), n_(n) {
    if (n < 2) throw InvalidInput("WeylIndex: dimension must be >= 2");
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InvalidInput("WeylIndex: (a, b) must lie in [0, n)");
  }

  /// Reduces arbitrary integers modulo n.
  static WeylIndex wrap(long long a, long long b, int n) {
    if (n < 2) throw InvalidInput("WeylIndex: dimension must be >= 2");
    return WeylIndex(positive_mod(a, n), positive_mod(b, n), n);
  }

  /// Inverse of single_index(): i = n a + b.
  static WeylIndex from_single(int i, int n) {
    if (n < 2 || i < 0 || i >= n * n) throw InvalidInput("WeylIndex: single index out of range");
    return WeylIndex(i / n, i % n, n);
  }

  static WeylIndex identity(int n) { return WeylIndex(0, 0, n); }

  int a() const { return a_; }
  int b() const { return b_; }
  int n() const { return n_; }
  int single_index() const { return n_ * a_ + b_; }
  bool is_identity() const { return a_ == 0 && b_ == 0; }

  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
  friend auto operator<=>(const WeylIndex&, const WeylIndex&) = default;

 private:
  int a_ = 0;
  int b_ = 0;
  int n_ = 2;
};

/// omega_n^exponent, kept as an exact exponent.
struct Phase {
  int n = 2;
  int exponent = 0;

  Phase() = default;
  Phase(int n_, long long e) : n(n_), exponent(positive_mod(e, n_)) {}

  template <typename Real = double>
  ComplexT<Real> value() const {
    return root_of_unity<Real>(n, exponent);
  }
  Phase operator*(const Phase& o) const { return Phase(n, exponent + o.exponent); }
  friend bool operator==(const Phase&, const Phase&) = default;
};

/// phase * U_index
struct PhasedIndex {
  Phase phase;
  WeylIndex index;
};

template <typename Real = double>
OperatorT<Real> weyl_matrix(const WeylIndex& idx) {
  const int n = idx.n();
  OperatorT<Real> m = OperatorT<Real>::Zero(n, n);
  for (int k = 0; k < n; ++k)
    m((k + idx.a()) % n, k) = root_of_unity<Real>(n, static_cast<long long>(idx.b()) * k);
  return m;
}

/// U_ab U_cd = omega^{bc} U_{a+c, b+d}
inline PhasedIndex weyl_product(const WeylIndex& x, const WeylIndex& y) {
  if (x.n() != y.n()) throw InvalidInput("weyl_product: dimension mismatch");
  const int n = x.n();
  return {Phase(n, static_cast<long long>(x.b()) * y.a()),
          WeylIndex::wrap(x.a() + y.a(), x.b() + y.b(), n)};
}

/// U_ab^dagger = omega^{ab} U_{-a,-b}
inline PhasedIndex weyl_adjoint(const WeylIndex& x) {
  const int n = x.n();
  return {Phase(n, static_cast<long long>(x.a()) * x.b()), WeylIndex::wrap(-x.a(), -x.b(), n)};
}

enum class CommutatorSign { minus, plus };

/// Single term of a formal sum over the Weyl basis.
template <typename Real = double>
struct WeylTerm {
  ComplexT<Real> coefficient;
  WeylIndex index;
};

/// [U_ab, U_cd]_{-/+} = (omega^{bc} -/+ omega^{ad}) U_{a+c, b+d}. The result
/// is empty when the coefficient vanishes; that decision is made on the
/// integer exponents, not on floating values.
template <typename Real = double>
std::optional<WeylTerm<Real>> weyl_commutator(const WeylIndex& x, const WeylIndex& y,
                                              CommutatorSign sign) {
  if (x.n() != y.n()) throw InvalidInput("weyl_commutator: dimension mismatch");
  const int n = x.n();
  const int bc = positive_mod(static_cast<long long>(x.b()) * y.a(), n);
  const int ad = positive_mod(static_cast<long long>(x.a()) * y.b(), n);
  const int diff = positive_mod(bc - ad, n);
  const bool vanishes = sign == CommutatorSign::minus ? diff == 0 : (n % 2 == 0 && 2 * diff == n);
  if (vanishes) return std::nullopt;
  const ComplexT<Real> c = sign == CommutatorSign::minus
                               ? root_of_unity<Real>(n, bc) - root_of_unity<Real>(n, ad)
                               : root_of_unity<Real>(n, bc) + root_of_unity<Real>(n, ad);
  return WeylTerm<Real>{c, WeylIndex::wrap(x.a() + y.a(), x.b() + y.b(), n)};
}

/// Coefficient f of U_ef in [U_ab^dagger, U_cd]_-. Nonzero only for
/// (e, f) = (c - a, d - b):  f = omega^{ab} (omega^{-bc} - omega^{-ad}).
template <typename Real = double>
ComplexT<Real> structure_constant(const WeylIndex& ab, const WeylIndex& cd, const WeylIndex& ef) {
  const int n = ab.n();
  if (cd.n() != n || ef.n() != n) throw InvalidInput("structure_constant: dimension mismatch");
  if (WeylIndex::wrap(cd.a() - ab.a(), cd.b() - ab.b(), n) != ef) return {0, 0};
  const long long a = ab.a(), b = ab.b(), c = cd.a(), d = cd.b();
  if (positive_mod(b * c - a * d, n) == 0) return {0, 0};
  return root_of_unity<Real>(n, a * b) * (root_of_unity<Real>(n, -b * c) - root_of_unity<Real>(n, -a * d));
}

/// Commutation of two single-node basis operators: ad - bc = 0 mod n.
inline bool weyl_commute(const WeylIndex& x, const WeylIndex& y) {
  return positive_mod(static_cast<long long>(x.a()) * y.b() - static_cast<long long>(x.b()) * y.a(),
                      x.n()) == 0;
}

template <typename Real = double>
struct DetEigs {
  int det = 1;                                // closed form (-1)^{(a+b)(n-1)}
  std::vector<ComplexT<Real>> eigenvalues;    // ascending principal argument
  ComplexT<Real> nth_power{1, 0};             // common value of lambda^n
};

/// Determinant from the closed form and eigenvalues from a dense solve,
/// ordered by principal argument in (-pi, pi], ties by solver index.
template <typename Real = double>
DetEigs<Real> weyl_det_eigs(const WeylIndex& idx) {
  const int n = idx.n();
  DetEigs<Real> out;
  out.det = ((idx.a() + idx.b()) * (n - 1)) % 2 == 0 ? 1 : -1;
  out.nth_power = ((idx.a() * idx.b()) * (n - 1)) % 2 == 0 ? ComplexT<Real>(1, 0) : ComplexT<Real>(-1, 0);
  Eigen::ComplexEigenSolver<OperatorT<Real>> solver(weyl_matrix<Real>(idx), false);
  const auto& ev = solver.eigenvalues();
  std::vector<std::pair<Real, int>> keyed;
  for (int i = 0; i < n; ++i) {
    Real arg = std::arg(ev(i));
    if (arg <= -std::numbers::pi_v<Real> + Real(1e-12)) arg = std::numbers::pi_v<Real>;
    keyed.emplace_back(arg, i);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  for (const auto& [arg, i] : keyed) out.eigenvalues.push_back(ev(i));
  return out;
}

/// |i><j|
template <typename Real = double>
OperatorT<Real> transition_matrix(int i, int j, int n) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidInput("transition_matrix: index out of range");
  OperatorT<Real> m = OperatorT<Real>::Zero(n, n);
  m(i, j) = 1;
  return m;
}

/// One hermitian SU(n) generator (or the identity), normalized to n.
struct SuNGenerator {
  enum class Kind { identity, u, v, w };
  Kind kind = Kind::identity;
  int i = 0;  // u/v: 0 <= i < k < n;  w: l stored in i
  int k = 0;
  int n = 2;

  static SuNGenerator identity(int n) { return {Kind::identity, 0, 0, n}; }
  static SuNGenerator make_u(int i, int k, int n) { return checked({Kind::u, i, k, n}); }
  static SuNGenerator make_v(int i, int k, int n) { return checked({Kind::v, i, k, n}); }
  static SuNGenerator make_w(int l, int n) { return checked({Kind::w, l, 0, n}); }

  std::string name() const {
    switch (kind) {
      case Kind::identity: return "1";
      case Kind::u: return "u" + std::to_string(i) + std::to_string(k);
      case Kind::v: return "v" + std::to_string(i) + std::to_string(k);
      case Kind::w: return "w" + std::to_string(i);
    }
    return "?";
  }

  template <typename Real = double>
  OperatorT<Real> matrix() const {
    OperatorT<Real> m = OperatorT<Real>::Zero(n, n);
    const Real s = std::sqrt(Real(n) / Real(2));
    switch (kind) {
      case Kind::identity:
        m.setIdentity();
        break;
      case Kind::u:
        m(i, k) = s;
        m(k, i) = s;
        break;
      case Kind::v:
        m(i, k) = ComplexT<Real>(0, s);
        m(k, i) = ComplexT<Real>(0, -s);
        break;
      case Kind::w: {
        const int l = i;
        const Real c = -std::sqrt(Real(n) / Real((l + 1) * (l + 2)));
        for (int q = 0; q <= l; ++q) m(q, q) = c;
        m(l + 1, l + 1) = -c * Real(l + 1);
        break;
      }
    }
    return m;
  }

 private:
  static SuNGenerator checked(SuNGenerator g) {
    if (g.n < 2) throw InvalidInput("SuNGenerator: n must be >= 2");
    if (g.kind == Kind::w) {
      if (g.i < 0 || g.i > g.n - 2) throw InvalidInput("SuNGenerator: w index out of range");
    } else if (!(0 <= g.i && g.i < g.k && g.k < g.n)) {
      throw InvalidInput("SuNGenerator: require 0 <= i < k < n");
    }
    return g;
  }
};

/// {1, u_01, u_02, ..., u_{n-2,n-1}, v_01, ..., w_0, ..., w_{n-2}}
inline std::vector<SuNGenerator> sun_generators(int n) {
  if (n < 2) throw InvalidInput("sun_generators: n must be >= 2");
  std::vector<SuNGenerator> out{SuNGenerator::identity(n)};
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) out.push_back(SuNGenerator::make_u(i, k, n));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) out.push_back(SuNGenerator::make_v(i, k, n));
  for (int l = 0; l + 2 <= n; ++l) out.push_back(SuNGenerator::make_w(l, n));
  return out;
}

enum class Basis { weyl, transition, sun };

inline std::string to_string(Basis b) {
  switch (b) {
    case Basis::weyl: return "weyl";
    case Basis::transition: return "transition";
    case Basis::sun: return "sun";
  }
  return "?";
}

/// Expansion coefficients: op = sum_s values[s] * element(s).
/// Element order: weyl s = n a + b; transition s = n i + j; sun as in
/// sun_generators().
template <typename Real = double>
struct BasisCoefficients {
  Basis basis = Basis::weyl;
  int n = 2;
  std::vector<ComplexT<Real>> values;
};

template <typename Real = double>
OperatorT<Real> basis_element(Basis basis, int n, int s) {
  switch (basis) {
    case Basis::weyl: return weyl_matrix<Real>(WeylIndex::from_single(s, n));
    case Basis::transition: return transition_matrix<Real>(s / n, s % n, n);
    case Basis::sun: return sun_generators(n).at(s).template matrix<Real>();
  }
  throw InvalidInput("basis_element: unknown basis");
}

/// Projects op onto a basis by traces: c_s = tr{B_s^dagger op} / tr{B_s^dagger B_s}.
template <typename Real = double>
BasisCoefficients<Real> expand(const OperatorT<Real>& op, Basis basis) {
  if (op.rows() != op.cols() || op.rows() < 2) throw InvalidInput("expand: operator must be square, dim >= 2");
  const int n = static_cast<int>(op.rows());
  BasisCoefficients<Real> out{basis, n, {}};
  out.values.reserve(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n * n; ++s) {
    const OperatorT<Real> b = basis_element<Real>(basis, n, s);
    const ComplexT<Real> num = (b.adjoint() * op).trace();
    const Real norm = basis == Basis::transition ? Real(1) : Real(n);
    out.values.push_back(num / norm);
  }
  return out;
}

template <typename Real = double>
OperatorT<Real> reconstruct(const BasisCoefficients<Real>& c) {
  OperatorT<Real> op = OperatorT<Real>::Zero(c.n, c.n);
  for (int s = 0; s < c.n * c.n; ++s)
    if (c.values[s] != ComplexT<Real>(0, 0)) op += c.values[s] * basis_element<Real>(c.basis, c.n, s);
  return op;
}

namespace detail {

inline int sun_u_position(int i, int k, int n) {
  // rank of (i, k), i < k, in lexicographic order
  return i * n - i * (i + 1) / 2 + (k - i - 1);
}

// Explicit closed-form coefficient transforms between the three bases. The
// SU(n) formulas are written for generators normalized to 2; rescale_sun
// converts to the normalization-n generators used here.
template <typename Real>
BasisCoefficients<Real> weyl_to_transition(const BasisCoefficients<Real>& in) {
  const int n = in.n;
  BasisCoefficients<Real> out{Basis::transition, n, std::vector<ComplexT<Real>>(n * n)};
  // U_ab = sum_k omega^{kb} P_{a+k,k}
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ComplexT<Real> c = in.values[n * a + b];
      for (int k = 0; k < n; ++k)
        out.values[n * ((a + k) % n) + k] += c * root_of_unity<Real>(n, static_cast<long long>(k) * b);
    }
  return out;
}

template <typename Real>
BasisCoefficients<Real> transition_to_weyl(const BasisCoefficients<Real>& in) {
  const int n = in.n;
  BasisCoefficients<Real> out{Basis::weyl, n, std::vector<ComplexT<Real>>(n * n)};
  // P_jk = (1/n) sum_b omega^{-bk} U_{j-k, b}
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const ComplexT<Real> c = in.values[n * j + k];
      for (int b = 0; b < n; ++b)
        out.values[n * positive_mod(j - k, n) + b] +=
            c * root_of_unity<Real>(n, -static_cast<long long>(b) * k) / Real(n);
    }
  return out;
}

template <typename Real>
BasisCoefficients<Real> weyl_to_sun(const BasisCoefficients<Real>& in) {
  const int n = in.n;
  const int pairs = n * (n - 1) / 2;
  const Real rescale = std::sqrt(Real(2) / Real(n));
  BasisCoefficients<Real> out{Basis::sun, n, std::vector<ComplexT<Real>>(n * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ComplexT<Real> c = in.values[n * a + b];
      if (c == ComplexT<Real>(0, 0)) continue;
      if (a == 0 && b == 0) out.values[0] += c;
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const ComplexT<Real> t1 = ((j + a) % n == k) ? root_of_unity<Real>(n, static_cast<long long>(b) * j) : ComplexT<Real>(0, 0);
          const ComplexT<Real> t2 = ((k + a) % n == j) ? root_of_unity<Real>(n, static_cast<long long>(b) * k) : ComplexT<Real>(0, 0);
          const int pos = sun_u_position(j, k, n);
          out.values[1 + pos] += c * rescale * Real(0.5) * (t1 + t2);
          out.values[1 + pairs + pos] += c * rescale * ComplexT<Real>(0, Real(0.5)) * (t1 - t2);
        }
      if (a == 0)
        for (int l = 0; l + 2 <= n; ++l) {
          ComplexT<Real> s = -Real(l + 1) * root_of_unity<Real>(n, static_cast<long long>(b) * (l + 1));
          for (int q = 1; q <= l + 1; ++q) s += root_of_unity<Real>(n, static_cast<long long>(b) * (q - 1));
          out.values[1 + 2 * pairs + l] += c * rescale * (-Real(1) / std::sqrt(Real(2 * (l + 1) * (l + 2)))) * s;
        }
    }
  return out;
}

template <typename Real>
BasisCoefficients<Real> sun_to_weyl(const BasisCoefficients<Real>& in) {
  const int n = in.n;
  const int pairs = n * (n - 1) / 2;
  const Real rescale = std::sqrt(Real(n) / Real(2));
  BasisCoefficients<Real> out{Basis::weyl, n, std::vector<ComplexT<Real>>(n * n)};
  out.values[0] += in.values[0];
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const int pos = sun_u_position(j, k, n);
      const ComplexT<Real> cu = in.values[1 + pos] * rescale;
      const ComplexT<Real> cv = in.values[1 + pairs + pos] * rescale;
      for (int b = 0; b < n; ++b) {
        const ComplexT<Real> e1 = root_of_unity<Real>(n, -static_cast<long long>(b) * k);
        const ComplexT<Real> e2 = root_of_unity<Real>(n, -static_cast<long long>(b) * j);
        const int a1 = positive_mod(j - k, n);
        const int a2 = positive_mod(k - j, n);
        out.values[n * a1 + b] += cu * e1 / Real(n) + cv * ComplexT<Real>(0, 1) * e1 / Real(n);
        out.values[n * a2 + b] += cu * e2 / Real(n) - cv * ComplexT<Real>(0, 1) * e2 / Real(n);
      }
    }
  for (int l = 0; l + 2 <= n; ++l) {
    const ComplexT<Real> cw = in.values[1 + 2 * pairs + l] * rescale;
    const Real pref = -std::sqrt(Real(2) / Real((l + 1) * (l + 2))) / Real(n);
    for (int b = 0; b < n; ++b) {
      ComplexT<Real> s = -Real(l + 1) * root_of_unity<Real>(n, -static_cast<long long>(b) * (l + 1));
      for (int q = 1; q <= l + 1; ++q) s += root_of_unity<Real>(n, -static_cast<long long>(b) * (q - 1));
      out.values[b] += cw * pref * s;
    }
  }
  return out;
}

template <typename Real>
BasisCoefficients<Real> transition_to_sun(const BasisCoefficients<Real>& in) {
  const int n = in.n;
  const int pairs = n * (n - 1) / 2;
  const Real s = std::sqrt(Real(n) / Real(2));
  BasisCoefficients<Real> out{Basis::sun, n, std::vector<ComplexT<Real>>(n * n)};
  // P_ik = (u_ik - i v_ik) / (2s), P_ki = (u_ik + i v_ik) / (2s) for i < k
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      const int pos = sun_u_position(i, k, n);
      const ComplexT<Real> cik = in.values[n * i + k];
      const ComplexT<Real> cki = in.values[n * k + i];
      out.values[1 + pos] += (cik + cki) / (Real(2) * s);
      out.values[1 + pairs + pos] += ComplexT<Real>(0, -1) * (cik - cki) / (Real(2) * s);
    }
  // P_jj = 1/n + sum_l (w_l)_jj / n * w_l
  for (int j = 0; j < n; ++j) {
    const ComplexT<Real> cjj = in.values[n * j + j];
    out.values[0] += cjj / Real(n);
    for (int l = 0; l + 2 <= n; ++l) {
      const Real c = -std::sqrt(Real(n) / Real((l + 1) * (l + 2)));
      Real diag = 0;
      if (j <= l) diag = c;
      else if (j == l + 1) diag = -c * Real(l + 1);
      out.values[1 + 2 * pairs + l] += cjj * diag / Real(n);
    }
  }
  return out;
}

template <typename Real>
BasisCoefficients<Real> sun_to_transition(const BasisCoefficients<Real>& in) {
  const int n = in.n;
  const auto gens = sun_generators(n);
  BasisCoefficients<Real> out{Basis::transition, n, std::vector<ComplexT<Real>>(n * n)};
  // Each generator is itself a short combination of transition operators.
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (in.values[s] == ComplexT<Real>(0, 0)) continue;
    const OperatorT<Real> m = gens[s].template matrix<Real>();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m(i, j) != ComplexT<Real>(0, 0)) out.values[n * i + j] += in.values[s] * m(i, j);
  }
  return out;
}

}  // namespace detail

/// Converts coefficients between bases with the explicit closed-form
/// relations (no traces are taken).
template <typename Real = double>
BasisCoefficients<Real> convert_basis(const BasisCoefficients<Real>& in, Basis to) {
  if (in.values.size() != static_cast<std::size_t>(in.n) * in.n)
    throw InvalidInput("convert_basis: coefficient count does not match n^2");
  if (in.basis == to) return in;
  using namespace detail;
  switch (in.basis) {
    case Basis::weyl:
      return to == Basis::transition ? weyl_to_transition(in) : weyl_to_sun(in);
    case Basis::transition:
      return to == Basis::weyl ? transition_to_weyl(in) : transition_to_sun(in);
    case Basis::sun:
      return to == Basis::weyl ? sun_to_weyl(in) : sun_to_transition(in);
  }
  throw InvalidInput("convert_basis: unknown basis");
}

/// Convenience overload: expand op in `from`, then convert to `to`.
template <typename Real = double>
BasisCoefficients<Real> convert_basis(const OperatorT<Real>& op, Basis from, Basis to) {
  return convert_basis(expand(op, from), to);
}

/// Every U_ab as a word in the two generators S = U_{n-1,0} and
/// Z = U_{0,n-1}: U_ab = phase * S^p Z^q with p = -a, q = -b (mod n).
struct TwoGeneratorWord {
  WeylIndex target;
  int shift_power = 0;  // power of U_{n-1,0}
  int phase_power = 0;  // power of U_{0,n-1}
  Phase phase;
  double residual = 0;  // max entry error of the matrix check
};

struct TwoGeneratorSpan {
  int n = 2;
  std::vector<TwoGeneratorWord> words;
  double max_residual = 0;
  bool verified = false;
};

inline TwoGeneratorSpan two_generator_span(int n, double tol = kDefaultTolerances.matrix) {
  if (n < 2) throw InvalidInput("two_generator_span: n must be >= 2");
  const Operator shift = weyl_matrix(WeylIndex(n - 1, 0, n));
  const Operator clock = weyl_matrix(WeylIndex(0, n - 1, n));
  TwoGeneratorSpan out;
  out.n = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      TwoGeneratorWord w;
      w.target = WeylIndex(a, b, n);
      w.shift_power = positive_mod(-a, n);
      w.phase_power = positive_mod(-b, n);
      // S^p = U_{-p,0}, Z^q = U_{0,-q}; their product carries omega^{0 * 0}.
      w.phase = Phase(n, 0);
      Operator word = Operator::Identity(n, n);
      for (int i = 0; i < w.shift_power; ++i) word = word * shift;
      for (int i = 0; i < w.phase_power; ++i) word = word * clock;
      w.residual = (w.phase.value() * word - weyl_matrix(w.target)).cwiseAbs().maxCoeff();
      out.max_residual = std::max(out.max_residual, w.residual);
      out.words.push_back(w);
    }
  out.verified = out.max_residual < tol;
  return out;
}

}  // namespace weylnet

#endif  // WEYLNET_OPERATOR_CORE_HPP
