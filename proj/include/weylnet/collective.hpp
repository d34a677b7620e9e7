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

#ifndef WEYLNET_COLLECTIVE_HPP
#define WEYLNET_COLLECTIVE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylnet/network.hpp"

namespace weylnet {

/// Single-node operators for two-level networks. X = u_01, Y = v_01 and
/// Z = w_0 of the SU(2) generator set; plus/minus = X +- iY.
enum class Site { X, Y, Z, I, plus, minus };

Operator site_matrix(Site s);
char site_char(Site s);

/// Kronecker product of site operators, node 0 first.
Operator selective_operator(const std::vector<Site>& sites);

/// N! / (alpha! beta! gamma! (N - alpha - beta - gamma)!).
std::int64_t omega_count(int nodes, int alpha, int beta, int gamma);

/// All placements of alpha X, beta Y and gamma Z among N nodes, ordered
/// lexicographically over X < Y < Z < I. The position in this list is p.
std::vector<std::vector<Site>> placements(int nodes, int alpha, int beta, int gamma);

struct CollectiveLabel {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  std::int64_t b = 0;

  friend bool operator==(const CollectiveLabel&, const CollectiveLabel&) = default;
  friend auto operator<=>(const CollectiveLabel&, const CollectiveLabel&) = default;
};

std::string to_string(const CollectiveLabel& l);

/// Every (alpha, beta, gamma, b); sum of Omega over classes is 4^N.
std::vector<CollectiveLabel> collective_labels(int nodes, bool b0_only = false);

/// sum_p omega_Omega^{p b} C_p.
Operator collective_operator(int nodes, const CollectiveLabel& label);

/// (1/Omega) sum_b omega_Omega^{-b p0} E_b, which recovers C_{p0}.
Operator selective_from_collective(int nodes, int alpha, int beta, int gamma, std::int64_t p0);

/// Coefficients with op = 2^{-N} sum E_{abc,b} E^_{abc,b},
/// E_{abc,b} = (1/Omega) tr{op E^dagger}.
struct CollectiveDecomposition {
  int nodes = 1;
  std::map<CollectiveLabel, Complex> values;

  Complex at(const CollectiveLabel& l) const;
  Complex at(int alpha, int beta, int gamma, std::int64_t b) const { return at({alpha, beta, gamma, b}); }
};

CollectiveDecomposition decompose_collective(const Operator& op, int nodes);
CollectiveDecomposition decompose_collective(const NetworkState& state);
Operator reconstruct(const CollectiveDecomposition& d);

/// Labels of the coherence-order family. Class (z, gamma): strings over
/// plus < minus < Z < I with #plus - #minus = z and gamma Z factors.
struct FLabel {
  int z = 0;
  int gamma = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const FLabel&, const FLabel&) = default;
};
/// Class m: strings over X < Y < Z < I with m non-identity factors.
struct GLabel {
  int m = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const GLabel&, const GLabel&) = default;
};

std::vector<std::vector<Site>> f_strings(int nodes, int z, int gamma);
std::vector<std::vector<Site>> g_strings(int nodes, int m);
Operator f_operator(int nodes, const FLabel& label);
Operator g_operator(int nodes, const GLabel& label);

/// op = 2^{-N} sum f F^ (resp. g G^); coefficients are inverse phase sums of
/// the selective expansion within each class.
std::map<FLabel, Complex> decompose_f(const Operator& op, int nodes);
std::map<GLabel, Complex> decompose_g(const Operator& op, int nodes);
Operator reconstruct_f(const std::map<FLabel, Complex>& coeffs, int nodes);
Operator reconstruct_g(const std::map<GLabel, Complex>& coeffs, int nodes);

enum class ParameterFamily { E0, F0, G0 };

/// Closed forms: (N+1)(N+2)(N+3)/6, (N+1)^2, N+1.
std::int64_t count_parameters(ParameterFamily family, int nodes);
/// Number of b = 0 classes by enumeration.
std::int64_t enumerate_parameters(ParameterFamily family, int nodes);

enum class Model { foerster, renormalization, stimulation };

struct ModelParams {
  double omega = 1.0;   // foerster
  double c_f = 0.3;
  double omega1 = 1.0;  // renormalization
  double omega2 = 0.6;
  double c_r = 0.25;
  double g = 1.0;       // stimulation
  double delta = 0.5;
};

/// Two-node model Hamiltonians written in collective operators, hbar = 1.
Operator model_hamiltonian(Model model, const ModelParams& p);

struct InvariantTerm {
  double coefficient = 0;
  CollectiveLabel label;
};

struct InvariantExpression {
  std::string name;
  std::vector<InvariantTerm> terms;

  Complex evaluate(const CollectiveDecomposition& d) const;
};

using InvariantSet = std::vector<InvariantExpression>;

InvariantSet hamiltonian_invariants(Model model, const ModelParams& p);

struct InvariantDrift {
  std::vector<std::string> names;
  std::vector<double> drift;  // max |value(t) - value(0)| per expression
  std::vector<double> initial;
  double max_drift = 0;
  std::string worst;
};

/// Evolves rho(t) = U rho0 U^dagger with the exact propagator on `steps`
/// equally spaced times in [0, t_final].
InvariantDrift verify_invariants(const InvariantSet& set, const Operator& h, const Operator& rho0, double t_final,
                                 int steps = 200);

}  // namespace weylnet

#endif  // WEYLNET_COLLECTIVE_HPP
