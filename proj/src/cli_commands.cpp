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

#include "weylnet/cli_commands.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "weylnet/cat_states.hpp"
#include "weylnet/coherence.hpp"
#include "weylnet/commuting_sets.hpp"
#include "weylnet/dynamics.hpp"
#include "weylnet/io.hpp"
#include "weylnet/linalg.hpp"
#include "weylnet/symmetry.hpp"

namespace weylnet {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size() || d < 0 || d != std::floor(d)) throw std::invalid_argument(v);
    return static_cast<std::uint64_t>(d);
  } catch (const std::exception&) {
    throw InvalidInput("config: " + key + " expects a non-negative integer, got '" + v + "'");
  }
}

double parse_positive(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size() || !(d > 0)) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw InvalidInput("config: " + key + " expects a positive number, got '" + v + "'");
  }
}

std::string fmt(const RunConfig& cfg, const char* fallback) { return cfg.format.empty() ? fallback : cfg.format; }

// Key/value summary rendered as JSON or two-column CSV.
std::string render(const json& obj, const std::string& format) {
  if (format == "json") return obj.dump(2) + "\n";
  std::ostringstream os;
  os << "key,value\n";
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    os << it.key() << ',';
    if (it->is_number_float())
      os << csv_number(it->get<double>());
    else if (it->is_string())
      os << it->get<std::string>();
    else
      os << it->dump();
    os << '\n';
  }
  return os.str();
}

std::string bits(std::int64_t k, int nodes) {
  std::string s(nodes, '0');
  for (int mu = 0; mu < nodes; ++mu)
    if ((k >> (nodes - 1 - mu)) & 1) s[mu] = '1';
  return s;
}

}  // namespace

void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "cap") {
    cfg.dimension_cap = static_cast<std::int64_t>(parse_unsigned(key, value));
  } else if (key == "budget") {
    cfg.search_budget = parse_unsigned(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_unsigned(key, value);
  } else if (key == "format") {
    cfg.format = value;
  } else if (key == "output") {
    cfg.output_path = value;
  } else if (key == "tol_matrix") {
    cfg.tolerances.matrix = parse_positive(key, value);
  } else if (key == "tol_state") {
    cfg.tolerances.state = parse_positive(key, value);
  } else if (key == "tol_unitarity") {
    cfg.tolerances.unitarity = parse_positive(key, value);
  } else if (key == "tol_cluster_sum") {
    cfg.tolerances.cluster_sum = parse_positive(key, value);
  } else {
    throw InvalidInput("config: unknown key '" + key + "'");
  }
  validate_config(cfg);
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    apply_config_value(base, trim(line.substr(0, eq)), value);
  }
  return base;
}

void validate_config(const RunConfig& cfg) {
  if (cfg.dimension_cap <= 0) throw InvalidInput("config: cap must be positive");
  if (cfg.search_budget == 0) throw InvalidInput("config: budget must be positive");
  if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv")
    throw InvalidInput("config: format must be json or csv");
}

std::string cmd_basis(int n, const RunConfig& cfg) {
  if (n < 2 || n > 8) throw InvalidInput("basis: n must lie in [2, 8]");
  const std::string format = fmt(cfg, "csv");
  std::ostringstream os;
  json ops = json::array();
  if (format == "csv") os << "a,b,row,col,re,im,phase\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const WeylIndex w(a, b, n);
      const Operator m = weyl_matrix(w);
      if (!is_unitary(m, cfg.tolerances.unitarity)) throw VerificationFailure("basis: U_" + std::to_string(a) + std::to_string(b) + " is not unitary");
      json phases = json::array();
      for (int k = 0; k < n; ++k) {
        const int row = (k + a) % n;
        const int phase = (b * k) % n;
        if (std::abs(m(row, k) - root_of_unity(n, phase)) > 1e-14)
          throw VerificationFailure("basis: entry phase mismatch");
        if (format == "csv")
          os << a << ',' << b << ',' << row << ',' << k << ',' << csv_number(m(row, k).real()) << ','
             << csv_number(m(row, k).imag()) << ',' << phase << '\n';
        phases.push_back(json{{"row", row}, {"col", k}, {"phase", phase}});
      }
      if (format == "json") ops.push_back(json{{"a", a}, {"b", b}, {"matrix", operator_to_json(m)}, {"phases", phases}});
    }
  if (format == "json") return json{{"n", n}, {"omega", "exp(2 pi i / n)"}, {"operators", ops}}.dump(2) + "\n";
  return os.str();
}

std::string cmd_table_csum(const std::vector<int>& ns, int max_nodes, const RunConfig& cfg) {
  if (ns.empty()) throw InvalidInput("table-csum: at least one n required");
  SearchOptions opt;
  opt.budget = cfg.search_budget;
  std::ostringstream os;
  json rows = json::array();
  const std::string format = fmt(cfg, "csv");
  if (format == "csv") os << "n,N,A,B,C,C_status,D,Cat\n";
  for (int n : ns) {
    if (n < 2 || n > 4) throw InvalidInput("table-csum: n must lie in [2, 4]");
    const int top = max_nodes > 0 ? max_nodes : (n == 4 ? 5 : 6);
    if (top > 6) throw InvalidInput("table-csum: N must be <= 6");
    for (int nodes = 1; nodes <= top; ++nodes) {
      const auto r = table_row(n, nodes, opt);
      const char* status = r.c_exact ? "exact" : "heuristic";
      if (format == "csv")
        os << n << ',' << nodes << ',' << r.a << ',' << r.b << ',' << r.c << ',' << status << ',' << r.d << ','
           << r.cat << '\n';
      rows.push_back(json{{"n", n}, {"N", nodes}, {"A", r.a}, {"B", r.b}, {"C", r.c}, {"C_status", status},
                          {"D", r.d}, {"Cat", r.cat}});
    }
  }
  if (format == "json") return rows.dump(2) + "\n";
  return os.str();
}

std::string cmd_fig_purity(int n_min, int n_max, int m_min, int m_max, const RunConfig& cfg) {
  if (n_min < 2 || n_max < n_min || m_min < 1 || m_max < m_min) throw InvalidInput("fig-purity: invalid ranges");
  std::ostringstream os;
  os << "n,m,p_m,source\n";
  for (int n = n_min; n <= n_max; ++n)
    for (int m = m_min; m <= m_max; ++m) {
      const double p = cat_purity_factor(n, m);
      // cross-check on an (m+1)-node cat state when it fits
      const double dim = std::pow(static_cast<double>(n), m + 1);
      std::string source = "formula";
      if (dim <= static_cast<double>(std::min<std::int64_t>(cfg.dimension_cap, 4096))) {
        const StateVector psi = cat_state(n, CatLabel(m + 1, 0));
        const Operator r = reduced_density(std::vector<int>(m + 1, n), psi, (std::uint64_t{1} << m) - 1);
        const double dm = std::pow(static_cast<double>(n), m);
        const double numeric = (dm * purity(r) - 1.0) / (dm - 1.0);
        if (std::abs(numeric - p) > cfg.tolerances.cluster_sum)
          throw VerificationFailure("fig-purity: numeric p_m disagrees with closed form");
        source = "numeric";
      }
      os << n << ',' << m << ',' << csv_number(p) << ',' << source << '\n';
    }
  return os.str();
}

std::string cmd_cat(std::optional<int> n, std::optional<int> nodes, const RunConfig& cfg) {
  std::ostringstream os;
  if (!n && !nodes) {
    os << "n,m,p_m\n";
    for (const auto& r : cat_purity_figure(2, 10, 8)) os << r.n << ',' << r.m << ',' << csv_number(r.p) << '\n';
    return os.str();
  }
  if (!n || !nodes) throw InvalidInput("cat: give both --n and --N, or neither");
  const auto prof = cat_profile(*n, *nodes);
  const auto rep = cat_verify(*n, *nodes, {CatLabel(*nodes, 0)}, cfg.dimension_cap);
  if (rep.max_cluster_sum_error > cfg.tolerances.cluster_sum || rep.max_purity_error > cfg.tolerances.cluster_sum ||
      rep.max_entropy_error > cfg.tolerances.cluster_sum)
    throw VerificationFailure("cat: numeric profile disagrees with closed form");
  const StateVector psi = cat_state(*n, CatLabel(*nodes, 0));
  const auto table = cluster_sums(std::vector<int>(*nodes, *n), psi, cfg.dimension_cap);
  os << "m,Y_closed,Y_numeric,p_closed\n";
  for (int m = 1; m <= *nodes; ++m)
    os << m << ',' << prof.y[m] << ',' << csv_number(table.y[(std::uint64_t{1} << m) - 1]) << ','
       << csv_number(prof.p[m]) << '\n';
  return os.str();
}

std::string cmd_echo(const EchoArgs& args, const RunConfig& cfg) {
  if (!args.schedule_path.empty()) {
    const auto schedule = schedule_from_json(read_json_file(args.schedule_path));
    if (schedule.segments.empty()) throw InvalidInput("echo: schedule is empty");
    const auto d = schedule.segments.front().op.rows();
    StateVector psi0 = StateVector::Zero(d);
    psi0[0] = 1.0;
    const auto tr = evolve(schedule, psi0);
    if (tr.max_norm_error > 1e-12) throw VerificationFailure("echo: norm not preserved");
    std::ostringstream os;
    os << "t";
    for (Eigen::Index k = 0; k < d; ++k) os << ",re" << k << ",im" << k;
    os << '\n';
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      os << csv_number(tr.times[i]);
      for (Eigen::Index k = 0; k < d; ++k)
        os << ',' << csv_number(tr.states[i][k].real()) << ',' << csv_number(tr.states[i][k].imag());
      os << '\n';
    }
    return os.str();
  }
  Operator h;
  if (!args.hamiltonian_path.empty()) {
    h = operator_from_json(read_json_file(args.hamiltonian_path));
  } else {
    if (args.n < 2 || args.n > 64) throw InvalidInput("echo: n must lie in [2, 64]");
    std::mt19937_64 rng(cfg.seed);
    h = random_hermitian(args.n, rng);
    h -= (h.trace() / static_cast<double>(args.n)) * Operator::Identity(args.n, args.n);
  }
  const auto r = echo_schedule(h, args.dt, args.cycles);
  const int n = static_cast<int>(h.rows());
  Operator prod = Operator::Identity(n, n);
  for (const auto& s : cyclic_to_pi_pulses(n)) prod = prod * s;
  const double factor_error = (prod - weyl_matrix(WeylIndex(n - 1, 0, n))).norm();
  if (r.distance > cfg.tolerances.state || r.repeated_distance > cfg.tolerances.state || factor_error != 0)
    throw VerificationFailure("echo: effective propagator is not the identity");
  json out{{"n", n},
           {"dt", args.dt},
           {"cycles", args.cycles},
           {"distance", r.distance},
           {"phase_distance", r.phase_distance},
           {"repeated_distance", r.repeated_distance},
           {"pi_pulses_per_shift", n - 1},
           {"pulse_count", r.pulse_count},
           {"factorization_error", factor_error}};
  return render(out, fmt(cfg, "json"));
}

std::string cmd_control(int m, double alpha_t, int nodes, const RunConfig& cfg) {
  if (m < 1 || m > 2) throw InvalidInput("control: m must be 1 or 2");
  if (nodes < 1 || nodes > 10 || (std::int64_t{1} << nodes) > cfg.dimension_cap)
    throw InvalidInput("control: N out of range");
  const Operator u = collective_control(m, alpha_t, nodes);
  const auto d = u.rows();
  const double unitarity = (u.adjoint() * u - Operator::Identity(d, d)).norm();
  const double product_error = (u - collective_control_product(m, alpha_t, nodes)).norm();
  if (unitarity > cfg.tolerances.state || product_error > cfg.tolerances.state)
    throw VerificationFailure("control: propagator checks failed");
  const StateVector out = u.col(0);
  json o{{"m", m}, {"alpha_t", alpha_t}, {"N", nodes}, {"unitarity_error", unitarity}, {"product_form_error", product_error}};
  if (m == 2 && nodes % 2 == 0 && std::abs(alpha_t - M_PI / 4) < 1e-15) {
    const double fid = std::abs(control_cat_target(nodes).dot(out));
    o["cat_infidelity"] = 1.0 - fid;
    if (1.0 - fid > cfg.tolerances.state) throw VerificationFailure("control: cat state not reached");
  }
  const std::string format = fmt(cfg, "csv");
  if (format == "json") {
    json amps = json::array();
    for (Eigen::Index k = 0; k < d; ++k) amps.push_back(complex_to_json(out[k]));
    o["amplitudes"] = amps;
    return o.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "basis,re,im\n";
  for (Eigen::Index k = 0; k < d; ++k)
    os << bits(k, nodes) << ',' << csv_number(out[k].real()) << ',' << csv_number(out[k].imag()) << '\n';
  return os.str();
}

std::string cmd_gray(int nodes, const RunConfig& cfg) {
  const auto g = gray_sequence(nodes);
  if (!is_gray_cycle(g)) throw VerificationFailure("gray: sequence is not a Hamming-1 cycle");
  std::ostringstream os;
  if (fmt(cfg, "csv") == "json") {
    json seq = json::array();
    for (std::size_t i = 0; i < g.codes.size(); ++i) seq.push_back(g.str(i));
    return json{{"N", nodes}, {"sequence", seq}}.dump(2) + "\n";
  }
  os << "index,bits\n";
  for (std::size_t i = 0; i < g.codes.size(); ++i) os << i << ',' << g.str(i) << '\n';
  return os.str();
}

Model parse_model(const std::string& name) {
  if (name == "foerster") return Model::foerster;
  if (name == "renormalization") return Model::renormalization;
  if (name == "stimulation") return Model::stimulation;
  throw InvalidInput("unknown model '" + name + "' (foerster, renormalization, stimulation)");
}

std::string cmd_invariants(Model model, const ModelParams& params, double t_final, int steps, const RunConfig& cfg) {
  if (!(t_final >= 0) || steps < 1) throw InvalidInput("invariants: invalid time grid");
  std::mt19937_64 rng(cfg.seed);
  const StateVector psi = random_pure_state(4, rng);
  const Operator rho0 = psi * psi.adjoint();
  const auto set = hamiltonian_invariants(model, params);
  const auto drift = verify_invariants(set, model_hamiltonian(model, params), rho0, t_final, steps);
  for (std::size_t i = 0; i < set.size(); ++i)
    if (drift.drift[i] > 1e-8 * (1 + std::abs(drift.initial[i])))
      throw VerificationFailure("invariants: drift exceeded for " + drift.names[i]);
  std::ostringstream os;
  os << "name,initial,drift\n";
  for (std::size_t i = 0; i < set.size(); ++i)
    os << csv_field(drift.names[i]) << ',' << csv_number(drift.initial[i]) << ',' << csv_number(drift.drift[i]) << '\n';
  return os.str();
}

std::string cmd_symmetry(int nodes, bool golden_json, const RunConfig& cfg) {
  if (golden_json) {
    json rows = json::array();
    for (const auto& y : young_basis_n4()) {
      json e = json::array();
      for (Eigen::Index k = 0; k < y.vector.size(); ++k)
        if (std::abs(y.vector[k]) > 0) e.push_back(json{{"ket", bits(k, 4)}, {"amplitude", y.vector[k].real()}});
      rows.push_back(json{{"config", y.config}, {"m", y.m}, {"j", y.j}, {"tableau", y.tableau}, {"terms", e}});
    }
    return rows.dump(2) + "\n";
  }
  const auto basis = spin_basis(nodes);
  std::int64_t total = 0, params = 0;
  std::ostringstream os;
  json classes = json::array();
  for (const auto& c : basis) {
    total += static_cast<std::int64_t>(c.multiplicity) * c.dimension();
    params += static_cast<std::int64_t>(c.dimension()) * c.dimension();
    classes.push_back(json{{"j", c.j}, {"multiplicity", c.multiplicity}, {"dimension", c.dimension()}});
  }
  if (total != (std::int64_t{1} << nodes) || params != count_parameters(ParameterFamily::E0, nodes))
    throw VerificationFailure("symmetry: dimension bookkeeping failed");
  if (fmt(cfg, "csv") == "json")
    return json{{"N", nodes}, {"classes", classes}, {"parameter_count", params}, {"xi0", count_parameters(ParameterFamily::E0, nodes)}}
               .dump(2) + "\n";
  os << "j,multiplicity,dimension\n";
  for (const auto& c : basis) os << csv_number(c.j) << ',' << c.multiplicity << ',' << c.dimension() << '\n';
  return os.str();
}

std::string cmd_collective_decompose(const std::string& state_path, const RunConfig& cfg) {
  const auto sf = state_from_json(read_json_file(state_path), cfg.dimension_cap);
  const auto state = NetworkState::from_density(sf.dims, sf.rho, cfg.dimension_cap, cfg.tolerances.state);
  const auto d = decompose_collective(state);
  if ((reconstruct(d) - state.rho()).norm() > cfg.tolerances.matrix * 100)
    throw VerificationFailure("collective-decompose: reconstruction failed");
  std::ostringstream os;
  os << "alpha,beta,gamma,b,re,im\n";
  for (const auto& [l, v] : d.values)
    os << l.alpha << ',' << l.beta << ',' << l.gamma << ',' << l.b << ',' << csv_number(v.real()) << ','
       << csv_number(v.imag()) << '\n';
  return os.str();
}

std::string cmd_analyze(const std::string& state_path, const RunConfig& cfg) {
  const auto sf = state_from_json(read_json_file(state_path), cfg.dimension_cap);
  const auto state = NetworkState::from_density(sf.dims, sf.rho, cfg.dimension_cap, cfg.tolerances.state);
  json out;
  out["dims"] = state.dims();

  json local = json::array();
  for (int mu = 0; mu < state.nodes(); ++mu) {
    const auto u = expand_state(partial_trace(state.rho(), state.dims(), std::uint64_t{1} << mu), cfg.tolerances.state);
    json entries = json::array();
    const int n = u.n();
    for (int i = 1; i < n * n; ++i)
      entries.push_back(json{{"a", i / n}, {"b", i % n}, {"re", u[i].real()}, {"im", u[i].imag()}});
    local.push_back(json{{"node", mu}, {"coherence", entries}});
  }
  out["local_coherence"] = local;

  const auto table = cluster_sums(state);
  if (std::abs(table.total() - table.sum_rule_target) > cfg.tolerances.cluster_sum * std::max(1.0, table.sum_rule_target))
    throw VerificationFailure("analyze: sum rule violated");
  out["cluster_sums"] = cluster_sums_to_json(table);

  if (state.uniform()) {
    const auto rep = purity_factors(state);
    if (rep.max_route_gap() > cfg.tolerances.cluster_sum) throw VerificationFailure("analyze: purity routes disagree");
    json p = json::array();
    for (const auto& c : rep.clusters) {
      std::vector<int> subset;
      for (int mu = 0; mu < state.nodes(); ++mu)
        if ((c.mask >> mu) & 1u) subset.push_back(mu);
      p.push_back(json{{"subset", subset}, {"m", c.size}, {"p", c.p_from_purity}, {"S_bits", c.entropy_bits}});
    }
    out["purity"] = p;
  }

  bool qubits = true;
  for (int n : state.dims()) qubits = qubits && n == 2;
  if (qubits && state.nodes() <= 8) {
    json coll = json::array();
    for (const auto& [l, v] : decompose_collective(state).values)
      if (std::abs(v) > cfg.tolerances.matrix)
        coll.push_back(json{{"alpha", l.alpha}, {"beta", l.beta}, {"gamma", l.gamma}, {"b", l.b}, {"re", v.real()}, {"im", v.imag()}});
    out["collective"] = coll;
    json weights = json::array();
    for (const auto& cls : spin_basis(state.nodes())) {
      double w = 0;
      for (const auto& copy : cls.copies)
        for (const auto& v : copy) w += v.dot(state.rho() * v).real();
      weights.push_back(json{{"j", cls.j}, {"weight", w}});
    }
    out["symmetry_weights"] = weights;
  }
  return out.dump(2) + "\n";
}

}  // namespace weylnet
