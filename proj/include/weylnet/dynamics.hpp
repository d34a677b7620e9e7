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

#ifndef WEYLNET_DYNAMICS_HPP
#define WEYLNET_DYNAMICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weylnet/types.hpp"

namespace weylnet {

/// Piecewise-constant evolution. A gate segment applies `op` instantly; an
/// evolution segment applies exp(-i op duration).
struct Segment {
  Operator op;
  double duration = 0;
  bool gate = false;
};

struct PulseSchedule {
  std::vector<Segment> segments;

  void add_evolution(Operator h, double dt) { segments.push_back({std::move(h), dt, false}); }
  void add_gate(Operator u) { segments.push_back({std::move(u), 0.0, true}); }
};

struct Trajectory {
  std::vector<double> times;        // after each segment, times[0] = 0
  std::vector<StateVector> states;  // states[0] = psi0
  double max_norm_error = 0;
};

/// Validates hermitian generators, unitary gates, finite non-negative
/// durations and matching dimensions.
Trajectory evolve(const PulseSchedule& schedule, const StateVector& psi0);
Operator schedule_unitary(const PulseSchedule& schedule, Eigen::Index dim);

/// Product of two-level swaps whose left-to-right product is U_{n-1,0}:
/// [S_{n-2,n-1}, ..., S_{12}, S_{01}].
std::vector<Operator> cyclic_to_pi_pulses(int n);
/// Indices (i, i+1) of each returned swap.
std::vector<std::pair<int, int>> pi_pulse_levels(int n);

struct EchoResult {
  PulseSchedule schedule;   // cycles * n repetitions of (evolution, cyclic gate)
  Operator cyclic;          // U_{n-1,0} written in the eigenbasis of H
  Operator u_eff;           // one cycle
  double distance = 0;      // || U_eff - 1 ||
  double phase_distance = 0;  // min over phi of || U_eff - e^{i phi} 1 ||
  double repeated_distance = 0;  // || U_eff^cycles - 1 ||
  std::int64_t pulse_count = 0;  // n (n - 1) cycles
};

/// (C U_H(dt / n))^n with C the cyclic shift of the eigenstates of H.
/// Throws InvalidInput naming the needed shift tr{H}/n when H is not traceless.
EchoResult echo_schedule(const Operator& h, double dt, int cycles = 1, double trace_tol = 1e-10);

/// Circular ordering of N-bit strings; bit N-1-mu of a code is node mu.
struct GraySequence {
  int nodes = 1;
  std::vector<std::uint32_t> codes;

  std::string str(std::size_t i) const;
};

GraySequence gray_sequence(int nodes);
/// All strings present once and circular neighbours differ in one bit.
bool is_gray_cycle(const GraySequence& g);

/// exp(-i alpha_t E_{m00,0}) for two-level nodes.
Operator collective_control(int m, double alpha_t, int nodes);
/// The same unitary from the product of commuting factors
/// cos(alpha_t) 1 - i sin(alpha_t) X...X over placements.
Operator collective_control_product(int m, double alpha_t, int nodes);
/// (|0...0> + s i |1...1>)/sqrt 2 with s = +1 when N/2 is even and -1 when odd.
StateVector control_cat_target(int nodes);

struct NetworkEchoReport {
  int nodes = 0;
  std::int64_t cycle_length = 0;
  bool single_transitions = false;   // Gray order step property
  bool product_eigenstates = false;  // H diagonal in the computational basis
  double residual = 0;               // || U_eff - 1 ||
  std::int64_t pulse_count = 0;      // 2^N (2^N - 1) per period
};

/// H = sum_mu (omega_mu / 2) Z_mu + sum_{mu<nu} C_{mu nu} Z_mu Z_nu, echoed by
/// cycling the product eigenstates in Gray order.
NetworkEchoReport selective_network_echo(const std::vector<double>& omegas,
                                         const std::vector<std::vector<double>>& couplings, double dt);

}  // namespace weylnet

#endif  // WEYLNET_DYNAMICS_HPP
