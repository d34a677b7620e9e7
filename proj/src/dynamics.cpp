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

#include "weylnet/dynamics.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "weylnet/collective.hpp"
#include "weylnet/linalg.hpp"
#include "weylnet/operator_core.hpp"

namespace weylnet {

namespace {

void check_segment(const Segment& s, Eigen::Index dim) {
  if (s.op.rows() != dim || s.op.cols() != dim) throw InvalidInput("evolve: segment dimension mismatch");
  if (!all_finite(s.op)) throw InvalidInput("evolve: non-finite segment operator");
  if (s.gate) {
    if (s.duration != 0) throw InvalidInput("evolve: gates must have zero duration");
    if (!is_unitary(s.op, kDefaultTolerances.unitarity)) throw InvalidInput("evolve: gate is not unitary");
  } else {
    if (!std::isfinite(s.duration) || s.duration < 0) throw InvalidInput("evolve: durations must be finite and >= 0");
    if (!is_hermitian(s.op, kDefaultTolerances.matrix)) throw InvalidInput("evolve: Hamiltonian is not hermitian");
  }
}

Operator segment_unitary(const Segment& s) { return s.gate ? s.op : unitary_propagator(s.op, s.duration); }

Operator swap_levels(int n, int i, int k) {
  Operator s = Operator::Identity(n, n);
  s(i, i) = s(k, k) = 0;
  s(i, k) = s(k, i) = 1;
  return s;
}

}  // namespace

Trajectory evolve(const PulseSchedule& schedule, const StateVector& psi0) {
  Trajectory tr;
  tr.times.push_back(0);
  tr.states.push_back(psi0);
  const double n0 = psi0.norm();
  double t = 0;
  for (const auto& s : schedule.segments) {
    check_segment(s, psi0.size());
    t += s.duration;
    tr.states.push_back(segment_unitary(s) * tr.states.back());
    tr.times.push_back(t);
    tr.max_norm_error = std::max(tr.max_norm_error, std::abs(tr.states.back().norm() - n0));
  }
  return tr;
}

Operator schedule_unitary(const PulseSchedule& schedule, Eigen::Index dim) {
  Operator u = Operator::Identity(dim, dim);
  for (const auto& s : schedule.segments) {
    check_segment(s, dim);
    u = segment_unitary(s) * u;
  }
  return u;
}

std::vector<std::pair<int, int>> pi_pulse_levels(int n) {
  if (n < 2) throw InvalidInput("cyclic_to_pi_pulses: n must be >= 2");
  std::vector<std::pair<int, int>> out;
  for (int i = n - 2; i >= 0; --i) out.emplace_back(i, i + 1);
  return out;
}

std::vector<Operator> cyclic_to_pi_pulses(int n) {
  std::vector<Operator> out;
  for (const auto& [i, k] : pi_pulse_levels(n)) out.push_back(swap_levels(n, i, k));
  return out;
}

EchoResult echo_schedule(const Operator& h, double dt, int cycles, double trace_tol) {
  if (h.rows() != h.cols() || h.rows() < 2) throw InvalidInput("echo: H must be square with dimension >= 2");
  if (!is_hermitian(h, kDefaultTolerances.matrix)) throw InvalidInput("echo: H is not hermitian");
  if (!std::isfinite(dt) || dt < 0) throw InvalidInput("echo: dt must be finite and >= 0");
  if (cycles < 1) throw InvalidInput("echo: cycles must be >= 1");
  const auto n = static_cast<int>(h.rows());
  const Complex tr = h.trace();
  if (std::abs(tr) > trace_tol) {
    std::ostringstream msg;
    msg << "echo: H must be traceless; subtract " << tr.real() / n << " times the identity";
    throw InvalidInput(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const Operator& v = es.eigenvectors();
  EchoResult r;
  r.cyclic = v * weyl_matrix(WeylIndex(n - 1, 0, n)) * v.adjoint();
  const Operator step = unitary_propagator(h, dt / n);
  for (int c = 0; c < cycles; ++c)
    for (int k = 0; k < n; ++k) {
      r.schedule.add_evolution(h, dt / n);
      r.schedule.add_gate(r.cyclic);
    }
  r.u_eff = Operator::Identity(n, n);
  for (int k = 0; k < n; ++k) r.u_eff = r.cyclic * step * r.u_eff;
  const Operator id = Operator::Identity(n, n);
  r.distance = (r.u_eff - id).norm();
  r.phase_distance = phase_optimized_distance(r.u_eff);
  r.repeated_distance = (schedule_unitary(r.schedule, n) - id).norm();
  r.pulse_count = static_cast<std::int64_t>(n) * (n - 1) * cycles;
  return r;
}

std::string GraySequence::str(std::size_t i) const {
  std::string s(nodes, '0');
  for (int mu = 0; mu < nodes; ++mu)
    if ((codes.at(i) >> (nodes - 1 - mu)) & 1u) s[mu] = '1';
  return s;
}

GraySequence gray_sequence(int nodes) {
  if (nodes < 1 || nodes > 20) throw InvalidInput("gray_sequence: N must lie in [1, 20]");
  GraySequence g;
  g.nodes = nodes;
  g.codes = {0, 1};
  for (int k = 2; k <= nodes; ++k) {
    std::vector<std::uint32_t> next;
    next.reserve(g.codes.size() * 2);
    for (std::size_t i = 0; i < g.codes.size(); ++i) {
      const std::uint32_t base = g.codes[i] << 1;
      if (i % 2 == 0) {
        next.push_back(base);
        next.push_back(base | 1u);
      } else {
        next.push_back(base | 1u);
        next.push_back(base);
      }
    }
    g.codes = std::move(next);
  }
  return g;
}

bool is_gray_cycle(const GraySequence& g) {
  const std::size_t size = std::size_t{1} << g.nodes;
  if (g.codes.size() != size) return false;
  std::vector<char> seen(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (g.codes[i] >= size || seen[g.codes[i]]) return false;
    seen[g.codes[i]] = 1;
    if (std::popcount(g.codes[i] ^ g.codes[(i + 1) % size]) != 1) return false;
  }
  return true;
}

Operator collective_control(int m, double alpha_t, int nodes) {
  if (m < 1 || m > nodes) throw InvalidInput("collective_control: need 1 <= m <= N");
  if (!std::isfinite(alpha_t)) throw InvalidInput("collective_control: alpha_t must be finite");
  return unitary_propagator(collective_operator(nodes, {m, 0, 0, 0}), alpha_t);
}

Operator collective_control_product(int m, double alpha_t, int nodes) {
  if (m < 1 || m > nodes) throw InvalidInput("collective_control_product: need 1 <= m <= N");
  const std::int64_t d = std::int64_t{1} << nodes;
  const Operator id = Operator::Identity(d, d);
  Operator u = id;
  for (const auto& p : placements(nodes, m, 0, 0))
    u = (std::cos(alpha_t) * id - Complex(0, std::sin(alpha_t)) * selective_operator(p)) * u;
  return u;
}

StateVector control_cat_target(int nodes) {
  if (nodes < 2 || nodes % 2 != 0) throw InvalidInput("control_cat_target: N must be even and >= 2");
  const std::int64_t d = std::int64_t{1} << nodes;
  StateVector v = StateVector::Zero(d);
  const double s = (nodes / 2) % 2 == 0 ? 1.0 : -1.0;
  v[0] = 1 / std::sqrt(2.0);
  v[d - 1] = Complex(0, s / std::sqrt(2.0));
  return v;
}

NetworkEchoReport selective_network_echo(const std::vector<double>& omegas,
                                         const std::vector<std::vector<double>>& couplings, double dt) {
  const int nodes = static_cast<int>(omegas.size());
  if (nodes < 1 || nodes > 6) throw InvalidInput("selective_network_echo: N must lie in [1, 6]");
  if (static_cast<int>(couplings.size()) != nodes) throw InvalidInput("selective_network_echo: coupling matrix must be N x N");
  for (const auto& row : couplings)
    if (static_cast<int>(row.size()) != nodes) throw InvalidInput("selective_network_echo: coupling matrix must be N x N");
  const std::int64_t d = std::int64_t{1} << nodes;
  Operator h = Operator::Zero(d, d);
  for (int mu = 0; mu < nodes; ++mu) {
    std::vector<Site> s(nodes, Site::I);
    s[mu] = Site::Z;
    h += (omegas[mu] / 2) * selective_operator(s);
    for (int nu = mu + 1; nu < nodes; ++nu) {
      std::vector<Site> p(nodes, Site::I);
      p[mu] = p[nu] = Site::Z;
      h += couplings[mu][nu] * selective_operator(p);
    }
  }
  NetworkEchoReport rep;
  rep.nodes = nodes;
  rep.cycle_length = d;
  const auto g = gray_sequence(nodes);
  rep.single_transitions = is_gray_cycle(g);
  const Operator off = h - Operator(h.diagonal().asDiagonal());
  rep.product_eigenstates = off.norm() < kDefaultTolerances.matrix;
  // cyclic shift along the Gray order: |g_i> -> |g_{i+1}>
  Operator c = Operator::Zero(d, d);
  for (std::int64_t i = 0; i < d; ++i) c(g.codes[(i + 1) % d], g.codes[i]) = 1.0;
  const Operator step = unitary_propagator(h, dt / static_cast<double>(d));
  Operator u = Operator::Identity(d, d);
  for (std::int64_t k = 0; k < d; ++k) u = c * step * u;
  rep.residual = (u - Operator::Identity(d, d)).norm();
  rep.pulse_count = d * (d - 1);
  return rep;
}

}  // namespace weylnet
