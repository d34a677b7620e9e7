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

#ifndef WEYLNET_IO_HPP
#define WEYLNET_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "weylnet/dynamics.hpp"
#include "weylnet/network.hpp"

namespace weylnet {

/// Classic-locale decimal with 17 significant digits.
std::string csv_number(double v);
/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& v);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// {"dim": D, "entries": [[{"re":..,"im":..}, ...], ...]}
nlohmann::json operator_to_json(const Operator& m);
Operator operator_from_json(const nlohmann::json& j);

/// State file: {"dims": [...], "dim": D, "entries": ...}. entries is either
/// a D x D density matrix or a length-D vector of amplitudes.
struct StateFile {
  std::vector<int> dims;
  Operator rho;
  bool pure = false;
  StateVector psi;  // set when pure
};

StateFile state_from_json(const nlohmann::json& j, std::int64_t cap = kDefaultDimensionCap);
nlohmann::json state_to_json(const std::vector<int>& dims, const StateVector& psi);
nlohmann::json state_to_json(const std::vector<int>& dims, const Operator& rho);

/// Reads and parses a file; malformed content raises InvalidInput.
nlohmann::json read_json_file(const std::string& path);

/// Schedule: [{"type": "evolution", "h": <operator>, "dt": t},
///            {"type": "gate", "u": <operator>}, ...]
PulseSchedule schedule_from_json(const nlohmann::json& j);

nlohmann::json cluster_sums_to_json(const ClusterSumTable& t);
std::string purity_csv(const PurityReport& r);

}  // namespace weylnet

#endif  // WEYLNET_IO_HPP
