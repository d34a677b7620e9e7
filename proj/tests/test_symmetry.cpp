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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "test_util.hpp"
#include "weylnet/collective.hpp"
#include "weylnet/symmetry.hpp"

using namespace weylnet;
using testutil::Cx;
using testutil::Mat;
using testutil::Vec;

namespace {

// S_a = (1/2) sum_mu sigma_a^(mu) with spin up = |1>
Mat spin_component(int nodes, char axis) {
  Mat s(2, 2);
  switch (axis) {
    case 'x': s << 0, 1, 1, 0; break;
    case 'y': s << 0, Cx(0, 1), Cx(0, -1), 0; break;
    default: s << -1, 0, 0, 1;
  }
  Mat total = Mat::Zero(1 << nodes, 1 << nodes);
  for (int mu = 0; mu < nodes; ++mu) {
    std::vector<Mat> f(nodes, Mat::Identity(2, 2));
    f[mu] = s;
    total += 0.5 * testutil::kron_list(f);
  }
  return total;
}

Mat ref_s2(int nodes) {
  const Mat x = spin_component(nodes, 'x'), y = spin_component(nodes, 'y'), z = spin_component(nodes, 'z');
  return x * x + y * y + z * z;
}

Vec ket16(std::initializer_list<std::pair<const char*, double>> terms, double scale) {
  Vec v = Vec::Zero(16);
  for (auto [k, c] : terms) v(std::stoi(k, nullptr, 2)) += scale * c;
  return v;
}

const YoungVector& find(const std::vector<YoungVector>& b, const std::string& config, double j, const std::string& t) {
  for (const auto& y : b)
    if (y.config == config && y.j == j && y.tableau == t) return y;
  throw std::runtime_error("row not found");
}

std::int64_t xi0(int nodes) { return (nodes + 1) * (nodes + 2) * (nodes + 3) / 6; }

}  // namespace

TEST(SpinOperators, MatchPauliSums) {
  for (int nodes = 1; nodes <= 5; ++nodes) {
    EXPECT_LT(testutil::max_abs(total_spin_squared(nodes) - ref_s2(nodes)), 1e-12);
    EXPECT_LT(testutil::max_abs(total_spin_z(nodes) - spin_component(nodes, 'z')), 1e-12);
    const Mat lower = spin_component(nodes, 'x') - Cx(0, 1) * spin_component(nodes, 'y');
    EXPECT_LT(testutil::max_abs(total_lowering(nodes) - lower), 1e-12);
  }
}

TEST(PermutationOperator, UnitaryAndHomomorphic) {
  const int nodes = 4;
  std::vector<int> p(nodes);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (const auto& s : all) {
    const Mat ps = permutation_operator(s);
    EXPECT_LT(testutil::max_abs(ps.adjoint() * ps - Mat::Identity(16, 16)), 1e-15);
    for (std::size_t k = 0; k < all.size(); k += 5) {
      const auto& t = all[k];
      std::vector<int> st(nodes);
      for (int mu = 0; mu < nodes; ++mu) st[mu] = s[t[mu]];
      EXPECT_LT(testutil::max_abs(ps * permutation_operator(t) - permutation_operator(st)), 1e-15);
    }
  }
  // node 0 -> 1 moves |1000> to |0100>
  EXPECT_NEAR(std::abs(permutation_operator({1, 0, 2, 3})(0b0100, 0b1000)), 1.0, 1e-15);
  EXPECT_THROW(permutation_operator({0, 0, 1}), InvalidInput);
}

TEST(PermutationOperator, CommutesWithSymmetricCollectives) {
  for (int nodes = 2; nodes <= 4; ++nodes) {
    std::vector<int> p(nodes);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Mat> perms;
    do perms.push_back(permutation_operator(p));
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& l : collective_labels(nodes, true)) {
      const Mat e = collective_operator(nodes, l);
      for (const auto& q : perms) ASSERT_LT(testutil::max_abs(e * q - q * e), 1e-12);
    }
  }
}

TEST(SpinBasis, DimensionBookkeeping) {
  for (int nodes = 1; nodes <= 8; ++nodes) {
    const auto basis = spin_basis(nodes);
    std::int64_t dim = 0, sq = 0;
    for (const auto& c : basis) {
      dim += static_cast<std::int64_t>(c.multiplicity) * c.dimension();
      sq += static_cast<std::int64_t>(c.dimension()) * c.dimension();
      EXPECT_EQ(static_cast<int>(c.copies.size()), c.multiplicity);
    }
    EXPECT_EQ(dim, std::int64_t{1} << nodes);
    EXPECT_EQ(sq, xi0(nodes));
  }
  const auto b2 = spin_basis(2);
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_EQ(b2[0].j, 1.0);
  EXPECT_EQ(b2[0].multiplicity, 1);
  EXPECT_EQ(b2[1].j, 0.0);
  EXPECT_EQ(b2[1].multiplicity, 1);
  const auto b4 = spin_basis(4);
  ASSERT_EQ(b4.size(), 3u);
  EXPECT_EQ(b4[0].multiplicity, 1);
  EXPECT_EQ(b4[1].multiplicity, 3);
  EXPECT_EQ(b4[2].multiplicity, 2);
  std::int64_t sq6 = 0;
  for (const auto& c : spin_basis(6)) sq6 += static_cast<std::int64_t>(c.dimension()) * c.dimension();
  EXPECT_EQ(sq6, 84);
}

TEST(SpinBasis, EigenvectorsAndOrthonormality) {
  for (int nodes = 2; nodes <= 6; ++nodes) {
    const Mat s2 = ref_s2(nodes), sz = spin_component(nodes, 'z');
    Mat all(1 << nodes, 1 << nodes);
    int col = 0;
    for (const auto& c : spin_basis(nodes))
      for (const auto& copy : c.copies)
        for (std::size_t k = 0; k < copy.size(); ++k) {
          const Vec& v = copy[k];
          const double m = c.j - double(k);
          EXPECT_LT((s2 * v - c.j * (c.j + 1) * v).norm(), 1e-10);
          EXPECT_LT((sz * v - m * v).norm(), 1e-10);
          all.col(col++) = v;
        }
    EXPECT_LT(testutil::max_abs(all.adjoint() * all - Mat::Identity(col, col)), 1e-10);
  }
  EXPECT_THROW(spin_basis(11), CapExceeded);
}

TEST(YoungTable, PrintedRows) {
  const auto b = young_basis_n4(false);
  ASSERT_EQ(b.size(), 16u);
  EXPECT_LT((find(b, "0011", 0, "12|34").vector - ket16({{"0011", 1}, {"0110", -1}, {"1001", -1}, {"1100", 1}}, 0.5))
                .norm(),
            1e-15);
  EXPECT_LT((find(b, "1111", 2, "1234").vector - ket16({{"1111", 1}}, 1)).norm(), 1e-15);
  EXPECT_LT((find(b, "0111", 1, "134|2").vector - ket16({{"0111", 1}, {"1011", -1}}, 1 / std::sqrt(2.0))).norm(), 1e-15);
  int per_j[3] = {0, 0, 0};
  for (const auto& y : b) ++per_j[static_cast<int>(y.j)];
  EXPECT_EQ(per_j[2], 5);
  EXPECT_EQ(per_j[1], 9);
  EXPECT_EQ(per_j[0], 2);
}

TEST(YoungTable, LabelsAreSpinQuantumNumbers) {
  const Mat s2 = ref_s2(4), sz = spin_component(4, 'z');
  const auto basis = spin_basis(4);
  for (const auto& y : young_basis_n4(false)) {
    EXPECT_NEAR(y.vector.norm(), 1.0, 1e-12) << y.config << " " << y.tableau;
    EXPECT_LT((s2 * y.vector - y.j * (y.j + 1) * y.vector).norm(), 1e-12) << y.config << " " << y.tableau;
    EXPECT_LT((sz * y.vector - y.m * y.vector).norm(), 1e-12);
    const auto w = spin_class_weights(basis, y.vector);
    for (std::size_t c = 0; c < basis.size(); ++c) EXPECT_NEAR(w[c], basis[c].j == y.j ? 1.0 : 0.0, 1e-10);
  }
}

TEST(YoungTable, OrthonormalizedBasis) {
  const auto golden = young_basis_n4(false);
  const auto& a = find(golden, "0011", 0, "12|34").vector;
  const auto& b = find(golden, "0011", 0, "13|24").vector;
  EXPECT_NEAR(std::abs(a.dot(b)), 0.5, 1e-15);
  const auto on = young_basis_n4(true);
  Mat all(16, 16);
  for (int i = 0; i < 16; ++i) all.col(i) = on[i].vector;
  EXPECT_LT(testutil::max_abs(all.adjoint() * all - Mat::Identity(16, 16)), 1e-12);
  // only the second j = 0 vector moved
  for (std::size_t i = 0; i < 16; ++i)
    if (on[i].tableau != "13|24") EXPECT_LT((on[i].vector - golden[i].vector).norm(), 1e-15);
}

TEST(Superselection, CrossClassElementsVanish) {
  EXPECT_LT(young_cross_class_elements(young_basis_n4(true)), 1e-10);
  EXPECT_LT(young_cross_class_elements(young_basis_n4(false)), 1e-10);
  const auto b = young_basis_n4(true);
  const Mat e = collective_operator(4, {1, 0, 0, 0});
  for (const auto& u : b)
    for (const auto& v : b)
      if (u.j == 0 && v.j == 1) EXPECT_LT(std::abs(u.vector.dot(e * v.vector)), 1e-12);
}

TEST(Superselection, ReportsForSmallNetworks) {
  for (int nodes = 2; nodes <= 6; ++nodes) {
    const auto r = superselection_check(nodes);
    EXPECT_LT(r.max_cross_j, 1e-10) << nodes;
    EXPECT_LT(r.max_cross_copy, 1e-10) << nodes;
    EXPECT_LT(r.max_copy_mismatch, 1e-10) << nodes;
    EXPECT_EQ(r.parameter_count, xi0(nodes));
    EXPECT_EQ(r.operator_count, xi0(nodes));
  }
  EXPECT_THROW(superselection_check(7), CapExceeded);
}

TEST(Superselection, AllUpStateStaysSymmetric) {
  const auto basis = spin_basis(4);
  const Vec psi = testutil::basis_ket(16, 0);
  for (const auto& l : collective_labels(4, true)) {
    const Vec out = collective_operator(4, l) * psi;
    if (out.norm() < 1e-14) continue;
    const auto w = spin_class_weights(basis, out / out.norm());
    EXPECT_NEAR(w[0], 1.0, 1e-10) << to_string(l);
  }
}

TEST(Superselection, SingletPairsAreInvariant) {
  Vec s = Vec::Zero(4);
  s(1) = 1 / std::sqrt(2.0);
  s(2) = -1 / std::sqrt(2.0);
  const Vec psi = testutil::kron(s * Mat::Identity(1, 1), s * Mat::Identity(1, 1));
  const auto w = spin_class_weights(spin_basis(4), psi);
  EXPECT_NEAR(w[2], 1.0, 1e-12);
  for (const auto& l : collective_labels(4, true)) {
    const Vec out = collective_operator(4, l) * psi;
    const Cx lam = psi.dot(out);
    EXPECT_LT((out - lam * psi).norm(), 1e-12) << to_string(l);
  }
  Vec singlet2 = s;
  EXPECT_NEAR(spin_class_weights(spin_basis(2), singlet2)[1], 1.0, 1e-12);
}

TEST(SymmetryBreaking, SingletPreparationStaysInClass) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto r = symmetry_breaking_scenario(seed);
    ASSERT_EQ(r.class_j.size(), 3u);
    EXPECT_NEAR(r.initial_weights[0], 1.0, 1e-12);
    for (std::size_t c = 0; c < 3; ++c) EXPECT_NEAR(r.prepared_weights[c], r.class_j[c] == 1.0 ? 1.0 : 0.0, 1e-12);
    EXPECT_LT(r.prep_error, 1e-12);
    EXPECT_LT(r.max_leakage, 1e-10);
    EXPECT_LT(r.max_class_leakage, 1e-10);
  }
}
