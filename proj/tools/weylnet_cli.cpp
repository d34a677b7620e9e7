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

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylnet/cli_commands.hpp"

namespace {

struct GlobalFlags {
  std::string config;
  std::int64_t cap = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::string format;
  std::string output;
};

weylnet::RunConfig build_config(const CLI::App& app, const GlobalFlags& f) {
  weylnet::RunConfig cfg;
  if (!f.config.empty()) cfg = weylnet::load_config_file(f.config);
  // flags override the file
  if (app.count("--cap")) cfg.dimension_cap = f.cap;
  if (app.count("--budget")) cfg.search_budget = f.budget;
  if (app.count("--seed")) cfg.seed = f.seed;
  if (app.count("--format")) cfg.format = f.format;
  if (app.count("--output")) cfg.output_path = f.output;
  weylnet::validate_config(cfg);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylnet: operator bases, cluster sums and protocols for finite-level quantum networks"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--config", g.config, "key=value configuration file");
  app.add_option("--cap", g.cap, "maximum global Hilbert-space dimension");
  app.add_option("--budget", g.budget, "clique search node budget");
  app.add_option("--seed", g.seed, "random seed (default 0)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", g.output, "write output to this file");

  int basis_n = 3;
  auto* basis = app.add_subcommand("basis", "dump the n^2 Weyl operators");
  basis->add_option("--n", basis_n, "node dimension")->required();

  std::vector<int> table_ns{2, 3, 4};
  int table_nodes = 0;
  auto* table = app.add_subcommand("table-csum", "maximal cluster sums of commuting-set eigenstates");
  table->add_option("--n", table_ns, "node dimensions");
  table->add_option("--N", table_nodes, "largest network size (0: default range)");

  std::optional<int> cat_n, cat_nodes;
  auto* cat = app.add_subcommand("cat", "cat-state purity data or a cluster profile");
  cat->add_option("--n", cat_n, "node dimension");
  cat->add_option("--N", cat_nodes, "number of nodes");

  int fig_n_min = 2, fig_n_max = 10, fig_m_min = 1, fig_m_max = 8;
  auto* fig = app.add_subcommand("fig-purity", "purity factors p_m of cat clusters");
  fig->add_option("--n-min", fig_n_min);
  fig->add_option("--n-max", fig_n_max);
  fig->add_option("--m-min", fig_m_min);
  fig->add_option("--m-max", fig_m_max);

  weylnet::EchoArgs echo_args;
  auto* echo = app.add_subcommand("echo", "cyclic-permutation echo or schedule simulation");
  echo->add_option("--n", echo_args.n, "dimension of the random traceless Hamiltonian");
  echo->add_option("--dt", echo_args.dt, "period");
  echo->add_option("--cycles", echo_args.cycles, "number of echo periods");
  echo->add_option("--hamiltonian", echo_args.hamiltonian_path, "operator JSON file");
  echo->add_option("--schedule", echo_args.schedule_path, "schedule JSON file");

  int control_m = 2, control_nodes = 4;
  double control_alpha_t = M_PI / 4;
  auto* control = app.add_subcommand("control", "collective control exp(-i alpha t E_m00,0)");
  control->add_option("--m", control_m);
  control->add_option("--alpha-t", control_alpha_t);
  control->add_option("--N", control_nodes);

  int gray_nodes = 3;
  auto* gray = app.add_subcommand("gray", "Gray-code cycle of N-bit strings");
  gray->add_option("--N", gray_nodes)->required();

  std::string model_name = "foerster";
  weylnet::ModelParams params;
  double inv_t = 20.0;
  int inv_steps = 200;
  auto* inv = app.add_subcommand("invariants", "collective invariants of the two-node models");
  inv->add_option("--model", model_name)->check(CLI::IsMember({"foerster", "renormalization", "stimulation"}));
  inv->add_option("--omega", params.omega);
  inv->add_option("--cf", params.c_f);
  inv->add_option("--omega1", params.omega1);
  inv->add_option("--omega2", params.omega2);
  inv->add_option("--cr", params.c_r);
  inv->add_option("--g", params.g);
  inv->add_option("--delta", params.delta);
  inv->add_option("--T", inv_t, "final time");
  inv->add_option("--steps", inv_steps);

  int sym_nodes = 4;
  bool sym_golden = false;
  auto* sym = app.add_subcommand("symmetry", "total-spin classes of N two-level nodes");
  sym->add_option("--N", sym_nodes);
  sym->add_flag("--golden-json", sym_golden, "dump the N=4 Young basis");

  std::string state_path;
  auto* coll = app.add_subcommand("collective-decompose", "collective-operator coefficients of a state");
  coll->add_option("--state", state_path)->required();
  auto* analyze = app.add_subcommand("analyze", "full report for a state file");
  analyze->add_option("--state", state_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto cfg = build_config(app, g);
    std::string out;
    if (*basis) out = weylnet::cmd_basis(basis_n, cfg);
    else if (*table) out = weylnet::cmd_table_csum(table_ns, table_nodes, cfg);
    else if (*cat) out = weylnet::cmd_cat(cat_n, cat_nodes, cfg);
    else if (*fig) out = weylnet::cmd_fig_purity(fig_n_min, fig_n_max, fig_m_min, fig_m_max, cfg);
    else if (*echo) out = weylnet::cmd_echo(echo_args, cfg);
    else if (*control) out = weylnet::cmd_control(control_m, control_alpha_t, control_nodes, cfg);
    else if (*gray) out = weylnet::cmd_gray(gray_nodes, cfg);
    else if (*inv) out = weylnet::cmd_invariants(weylnet::parse_model(model_name), params, inv_t, inv_steps, cfg);
    else if (*sym) out = weylnet::cmd_symmetry(sym_nodes, sym_golden, cfg);
    else if (*coll) out = weylnet::cmd_collective_decompose(state_path, cfg);
    else if (*analyze) out = weylnet::cmd_analyze(state_path, cfg);

    if (cfg.output_path.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(cfg.output_path, std::ios::binary);
      if (!f) throw weylnet::InvalidInput("cannot write " + cfg.output_path);
      f << out;
    }
    return 0;
  } catch (const weylnet::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const weylnet::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const weylnet::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
