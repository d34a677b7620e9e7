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

#include "weylnet/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "weylnet/collective.hpp"
#include "weylnet/linalg.hpp"

namespace weylnet {

namespace {

void check_nodes(int nodes) {
  if (nodes < 1) throw InvalidInput("symmetry: N must be >= 1");
  if (nodes > 10) throw CapExceeded("symmetry: N must be <= 10");
}

int bit_of(std::int64_t k, int mu, int nodes) { return static_cast<int>((k >> (nodes - 1 - mu)) & 1); }

StateVector apply_lowering(const StateVector& v, int nodes) {
  StateVector out = StateVector::Zero(v.size());
  for (std::int64_t k = 0; k < v.size(); ++k) {
    if (v[k] == Complex(0, 0)) continue;
    for (int mu = 0; mu < nodes; ++mu) {
      const std::int64_t bit = std::int64_t{1} << (nodes - 1 - mu);
      if (k & bit) out[k ^ bit] += v[k];
    }
  }
  return out;
}

StateVector apply_raising(const StateVector& v, int nodes) {
  StateVector out = StateVector::Zero(v.size());
  for (std::int64_t k = 0; k < v.size(); ++k) {
    if (v[k] == Complex(0, 0)) continue;
    for (int mu = 0; mu < nodes; ++mu) {
      const std::int64_t bit = std::int64_t{1} << (nodes - 1 - mu);
      if (!(k & bit)) out[k | bit] += v[k];
    }
  }
  return out;
}

struct GoldenTerm {
  const char* ket;
  double coefficient;
};

struct GoldenRow {
  const char* config;
  double m;
  double j;
  const char* tableau;
  double scale;
  std::vector<GoldenTerm> terms;
};

std::vector<GoldenRow> golden_rows() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  return {
      {"1111", 2, 2, "1234", 1.0, {{"1111", 1}}},
      {"0111", 1, 2, "1234", 0.5, {{"1110", 1}, {"1101", 1}, {"1011", 1}, {"0111", 1}}},
      {"0111", 1, 1, "123|4", 1 / (2 * s3), {{"1110", 3}, {"1101", -1}, {"1011", -1}, {"0111", -1}}},
      {"0111", 1, 1, "124|3", 1 / s6, {{"1101", 2}, {"1011", -1}, {"0111", -1}}},
      {"0111", 1, 1, "134|2", 1 / s2, {{"0111", 1}, {"1011", -1}}},
      {"0011", 0, 2, "1234", 1 / s6,
       {{"0011", 1}, {"0101", 1}, {"0110", 1}, {"1001", 1}, {"1010", 1}, {"1100", 1}}},
      {"0011", 0, 1, "123|4", 1 / s6,
       {{"0011", 1}, {"0101", 1}, {"0110", -1}, {"1001", 1}, {"1010", -1}, {"1100", -1}}},
      {"0011", 0, 1, "124|3", 1 / (2 * s3),
       {{"0011", 2}, {"0101", -1}, {"0110", 1}, {"1001", -1}, {"1010", 1}, {"1100", -2}}},
      {"0011", 0, 1, "134|2", 0.5, {{"0101", 1}, {"0110", 1}, {"1001", -1}, {"1010", -1}}},
      {"0011", 0, 0, "12|34", 0.5, {{"0011", 1}, {"0110", -1}, {"1001", -1}, {"1100", 1}}},
      {"0011", 0, 0, "13|24", 0.5, {{"0101", 1}, {"0110", -1}, {"1001", -1}, {"1010", 1}}},
      {"0001", -1, 2, "1234", 0.5, {{"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}}},
      {"0001", -1, 1, "123|4", 1 / (2 * s3), {{"0001", 3}, {"0010", -1}, {"0100", -1}, {"1000", -1}}},
      {"0001", -1, 1, "124|3", 1 / s6, {{"0010", 2}, {"0100", -1}, {"1000", -1}}},
      {"0001", -1, 1, "134|2", 1 / s2, {{"1000", 1}, {"0100", -1}}},
      {"0000", -2, 2, "1234", 1.0, {{"0000", 1}}},
  };
}

}  // namespace

Operator permutation_operator(const std::vector<int>& perm) {
  const int nodes = static_cast<int>(perm.size());
  check_nodes(nodes);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < nodes; ++i)
    if (sorted[i] != i) throw InvalidInput("permutation_operator: not a permutation of 0..N-1");
  const std::int64_t d = std::int64_t{1} << nodes;
  Operator p = Operator::Zero(d, d);
  for (std::int64_t k = 0; k < d; ++k) {
    std::int64_t image = 0;
    for (int mu = 0; mu < nodes; ++mu)
      if (bit_of(k, mu, nodes)) image |= std::int64_t{1} << (nodes - 1 - perm[mu]);
    p(image, k) = 1.0;
  }
  return p;
}

Operator total_spin_squared(int nodes) {
  check_nodes(nodes);
  const std::int64_t d = std::int64_t{1} << nodes;
  Operator s = Operator::Zero(d, d);
  const double diag = 0.75 * nodes - 0.25 * nodes * (nodes - 1);
  for (std::int64_t k = 0; k < d; ++k) {
    s(k, k) += diag;
    for (int mu = 0; mu < nodes; ++mu)
      for (int nu = mu + 1; nu < nodes; ++nu) {
        std::int64_t swapped = k;
        if (bit_of(k, mu, nodes) != bit_of(k, nu, nodes))
          swapped ^= (std::int64_t{1} << (nodes - 1 - mu)) | (std::int64_t{1} << (nodes - 1 - nu));
        s(swapped, k) += 1.0;
      }
  }
  return s;
}

Operator total_spin_z(int nodes) {
  check_nodes(nodes);
  const std::int64_t d = std::int64_t{1} << nodes;
  Operator s = Operator::Zero(d, d);
  for (std::int64_t k = 0; k < d; ++k) s(k, k) = std::popcount(static_cast<std::uint64_t>(k)) - 0.5 * nodes;
  return s;
}

Operator total_lowering(int nodes) {
  check_nodes(nodes);
  const std::int64_t d = std::int64_t{1} << nodes;
  Operator s = Operator::Zero(d, d);
  for (std::int64_t k = 0; k < d; ++k) {
    StateVector e = StateVector::Zero(d);
    e[k] = 1.0;
    s.col(k) = apply_lowering(e, nodes);
  }
  return s;
}

std::vector<SymmetryClass> spin_basis(int nodes) {
  check_nodes(nodes);
  const std::int64_t d = std::int64_t{1} << nodes;
  const Operator s2 = total_spin_squared(nodes);
  std::vector<SymmetryClass> out;
  for (int twice_j = nodes; twice_j >= 0; twice_j -= 2) {
    const double j = 0.5 * twice_j;
    const int ups = (nodes + twice_j) / 2;
    std::vector<std::int64_t> sector;
    for (std::int64_t k = 0; k < d; ++k)
      if (std::popcount(static_cast<std::uint64_t>(k)) == ups) sector.push_back(k);
    const auto dim = static_cast<Eigen::Index>(sector.size());
    Operator block(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c) block(r, c) = s2(sector[r], sector[c]);
    Eigen::SelfAdjointEigenSolver<Operator> es(block);
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < dim; ++i)
      if (std::abs(es.eigenvalues()[i] - j * (j + 1)) < 1e-8) cols.push_back(i);
    Operator v(dim, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) v.col(i) = es.eigenvectors().col(cols[i]);

    SymmetryClass cls;
    cls.j = j;
    cls.multiplicity = static_cast<int>(cols.size());
    std::vector<StateVector> heads;
    for (Eigen::Index i = 0; i < dim && static_cast<int>(heads.size()) < cls.multiplicity; ++i) {
      StateVector w = v * v.row(i).adjoint();  // projection of the i-th sector state
      for (const auto& h : heads) w -= h.dot(w) * h;
      const double norm = w.norm();
      if (norm < 1e-8) continue;
      heads.push_back(w / norm);
    }
    for (const auto& h : heads) {
      StateVector full = StateVector::Zero(d);
      for (Eigen::Index i = 0; i < dim; ++i) full[sector[i]] = h[i];
      std::vector<StateVector> ladder{full};
      for (int k = 0; k < twice_j; ++k) {
        const double m = j - k;
        ladder.push_back(apply_lowering(ladder.back(), nodes) / std::sqrt(j * (j + 1) - m * (m - 1)));
      }
      cls.copies.push_back(std::move(ladder));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<double> spin_class_weights(const std::vector<SymmetryClass>& basis, const StateVector& psi) {
  std::vector<double> w;
  for (const auto& cls : basis) {
    double acc = 0;
    for (const auto& copy : cls.copies)
      for (const auto& v : copy) {
        if (v.size() != psi.size()) throw InvalidInput("spin_class_weights: dimension mismatch");
        acc += std::norm(v.dot(psi));
      }
    w.push_back(acc);
  }
  return w;
}

std::vector<YoungVector> young_basis_n4(bool orthonormalize) {
  std::vector<YoungVector> out;
  for (const auto& row : golden_rows()) {
    YoungVector y;
    y.config = row.config;
    y.m = row.m;
    y.j = row.j;
    y.tableau = row.tableau;
    y.vector = StateVector::Zero(16);
    for (const auto& t : row.terms) y.vector[std::stoi(t.ket, nullptr, 2)] += row.scale * t.coefficient;
    out.push_back(std::move(y));
  }
  if (orthonormalize) {
    // second j = 0 vector against the first
    auto first = std::find_if(out.begin(), out.end(), [](const YoungVector& y) { return y.tableau == "12|34"; });
    auto second = std::find_if(out.begin(), out.end(), [](const YoungVector& y) { return y.tableau == "13|24"; });
    StateVector w = second->vector - first->vector.dot(second->vector) * first->vector;
    second->vector = w / w.norm();
  }
  return out;
}

SuperselectionReport superselection_check(int nodes) {
  check_nodes(nodes);
  if (nodes > 6) throw CapExceeded("superselection_check: N must be <= 6");
  const auto basis = spin_basis(nodes);
  const std::int64_t d = std::int64_t{1} << nodes;
  // columns ordered by class, copy, m
  struct Slot {
    int cls, copy, k;
  };
  std::vector<Slot> slots;
  Operator b(d, d);
  Eigen::Index col = 0;
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t q = 0; q < basis[c].copies.size(); ++q)
      for (std::size_t k = 0; k < basis[c].copies[q].size(); ++k) {
        b.col(col++) = basis[c].copies[q][k];
        slots.push_back({static_cast<int>(c), static_cast<int>(q), static_cast<int>(k)});
      }
  SuperselectionReport rep;
  rep.nodes = nodes;
  for (const auto& cls : basis) rep.parameter_count += static_cast<std::int64_t>(cls.dimension()) * cls.dimension();
  const auto labels = collective_labels(nodes, true);
  rep.operator_count = static_cast<std::int64_t>(labels.size());
  for (const auto& l : labels) {
    const Operator a = b.adjoint() * collective_operator(nodes, l) * b;
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) {
        const auto& sr = slots[r];
        const auto& sc = slots[c];
        const double v = std::abs(a(r, c));
        if (sr.cls != sc.cls) {
          rep.max_cross_j = std::max(rep.max_cross_j, v);
        } else if (sr.copy != sc.copy) {
          rep.max_cross_copy = std::max(rep.max_cross_copy, v);
        } else if (sr.copy > 0) {
          const Eigen::Index shift = static_cast<Eigen::Index>(sr.copy) * basis[sr.cls].dimension();
          rep.max_copy_mismatch = std::max(rep.max_copy_mismatch, std::abs(a(r, c) - a(r - shift, c - shift)));
        }
      }
  }
  return rep;
}

double young_cross_class_elements(const std::vector<YoungVector>& basis) {
  double worst = 0;
  for (const auto& l : collective_labels(4, true)) {
    const Operator e = collective_operator(4, l);
    for (const auto& u : basis)
      for (const auto& v : basis)
        if (u.j != v.j) worst = std::max(worst, std::abs(u.vector.dot(e * v.vector)));
  }
  return worst;
}

SymmetryBreakingReport symmetry_breaking_scenario(std::uint64_t seed, double t_max, int steps) {
  if (steps < 1 || !(t_max >= 0)) throw InvalidInput("symmetry_breaking_scenario: invalid time grid");
  constexpr int nodes = 4;
  const auto basis = spin_basis(nodes);
  SymmetryBreakingReport rep;
  for (const auto& cls : basis) rep.class_j.push_back(cls.j);

  StateVector psi = StateVector::Zero(16);
  psi[0] = 1.0;
  rep.initial_weights = spin_class_weights(basis, psi);

  const Operator x = site_matrix(Site::X);
  Operator hadamard(2, 2);
  hadamard << 1, 1, 1, -1;
  hadamard /= std::sqrt(2.0);
  Operator cnot = Operator::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  const Operator id2 = Operator::Identity(2, 2);
  const Operator id4 = Operator::Identity(4, 4);
  psi = kron(kron(x, x), id4) * psi;
  psi = kron(kron(hadamard, id2), id4) * psi;
  psi = kron(cnot, id4) * psi;

  StateVector target = StateVector::Zero(16);
  target[0b0100] = 1 / std::sqrt(2.0);
  target[0b1000] = -1 / std::sqrt(2.0);
  rep.prep_error = (psi - target).norm();
  rep.prepared_weights = spin_class_weights(basis, psi);

  // reachable space: psi and its raised partners within the same copy
  Operator q(16, 3);
  StateVector v = psi;
  for (int k = 0; k < 3; ++k) {
    StateVector w = v;
    for (int i = 0; i < k; ++i) w -= q.col(i).dot(w) * q.col(i);
    q.col(k) = w / w.norm();
    v = apply_raising(v, nodes);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Operator h = Operator::Zero(16, 16);
  for (const auto& l : collective_labels(nodes, true)) h += normal(rng) * collective_operator(nodes, l);
  h = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const StateVector coeff = es.eigenvectors().adjoint() * psi;
  std::size_t j1 = 0;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (basis[c].j == 1.0) j1 = c;
  for (int k = 1; k <= steps; ++k) {
    const double t = t_max * k / steps;
    StateVector phased = coeff;
    for (Eigen::Index i = 0; i < phased.size(); ++i) phased[i] *= std::exp(Complex(0, -es.eigenvalues()[i] * t));
    const StateVector psi_t = es.eigenvectors() * phased;
    rep.max_leakage = std::max(rep.max_leakage, std::abs(1.0 - (q.adjoint() * psi_t).squaredNorm()));
    rep.max_class_leakage =
        std::max(rep.max_class_leakage, std::abs(1.0 - spin_class_weights(basis, psi_t)[j1]));
  }
  return rep;
}

}  // namespace weylnet
