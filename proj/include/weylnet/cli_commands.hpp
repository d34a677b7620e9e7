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

#ifndef WEYLNET_CLI_COMMANDS_HPP
#define WEYLNET_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylnet/collective.hpp"
#include "weylnet/types.hpp"

namespace weylnet {

struct RunConfig {
  std::int64_t dimension_cap = kDefaultDimensionCap;
  Tolerances tolerances = kDefaultTolerances;
  std::uint64_t search_budget = 100'000'000;
  std::string format;  // "json" or "csv"; empty picks the command default
  std::string output_path;
  std::uint64_t seed = 0;
};

/// Applies one key=value setting. Keys: cap, budget, seed, format, output,
/// tol_matrix, tol_state, tol_unitarity, tol_cluster_sum.
void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value);
/// Reads key=value lines; '#' starts a comment.
RunConfig load_config_file(const std::string& path, RunConfig base = {});
void validate_config(const RunConfig& cfg);

std::string cmd_basis(int n, const RunConfig& cfg);
/// n_max_nodes = 0 uses the table's own N range per n.
std::string cmd_table_csum(const std::vector<int>& ns, int max_nodes, const RunConfig& cfg);
std::string cmd_fig_purity(int n_min, int n_max, int m_min, int m_max, const RunConfig& cfg);
/// Without n and N: the purity figure grid; with them: a closed-form versus
/// numeric cluster profile.
std::string cmd_cat(std::optional<int> n, std::optional<int> nodes, const RunConfig& cfg);

struct EchoArgs {
  int n = 3;
  double dt = 1.0;
  int cycles = 1;
  std::string hamiltonian_path;  // optional operator JSON
  std::string schedule_path;     // optional: simulate this schedule instead
};
std::string cmd_echo(const EchoArgs& args, const RunConfig& cfg);

std::string cmd_control(int m, double alpha_t, int nodes, const RunConfig& cfg);
std::string cmd_gray(int nodes, const RunConfig& cfg);
std::string cmd_invariants(Model model, const ModelParams& params, double t_final, int steps, const RunConfig& cfg);
std::string cmd_symmetry(int nodes, bool golden_json, const RunConfig& cfg);
std::string cmd_collective_decompose(const std::string& state_path, const RunConfig& cfg);
std::string cmd_analyze(const std::string& state_path, const RunConfig& cfg);

Model parse_model(const std::string& name);

}  // namespace weylnet

#endif  // WEYLNET_CLI_COMMANDS_HPP
