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

#include "weylnet/io.hpp"

#include <bit>
#include <fstream>
#include <locale>
#include <sstream>

#include "weylnet/linalg.hpp"

namespace weylnet {

using nlohmann::json;

std::string csv_number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object() && j.contains("re")) {
    const double re = j.at("re").get<double>();
    const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
    return {re, im};
  }
  throw InvalidInput("complex number must be {\"re\":..,\"im\":..} or a number");
}

json operator_to_json(const Operator& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", rows}};
}

namespace {

Operator matrix_from_entries(const json& e) {
  if (!e.is_array() || e.empty()) throw InvalidInput("operator entries must be a non-empty array of rows");
  const auto d = static_cast<Eigen::Index>(e.size());
  Operator m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    if (!e[r].is_array() || static_cast<Eigen::Index>(e[r].size()) != d)
      throw InvalidInput("operator entries must form a square matrix");
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = complex_from_json(e[r][c]);
  }
  return m;
}

}  // namespace

Operator operator_from_json(const json& j) {
  try {
    const json& e = j.is_object() ? j.at("entries") : j;
    Operator m = matrix_from_entries(e);
    if (j.is_object() && j.contains("dim") && j.at("dim").get<std::int64_t>() != m.rows())
      throw InvalidInput("operator \"dim\" does not match entries");
    if (!all_finite(m)) throw InvalidInput("operator has non-finite entries");
    return m;
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed operator JSON: ") + ex.what());
  }
}

StateFile state_from_json(const json& j, std::int64_t cap) {
  try {
    StateFile s;
    s.dims = j.at("dims").get<std::vector<int>>();
    std::int64_t d = 1;
    for (int n : s.dims) {
      if (n < 2) throw InvalidInput("state: node dimensions must be >= 2");
      d *= n;
      if (d > cap) throw CapExceeded("state: dimension exceeds cap");
    }
    if (j.contains("dim") && j.at("dim").get<std::int64_t>() != d)
      throw InvalidInput("state: \"dim\" does not match prod(dims)");
    const json& e = j.at("entries");
    if (!e.is_array() || static_cast<std::int64_t>(e.size()) != d)
      throw InvalidInput("state: entries must have prod(dims) rows or amplitudes");
    if (e[0].is_array()) {
      s.rho = matrix_from_entries(e);
    } else {
      s.pure = true;
      s.psi = StateVector(d);
      for (std::int64_t k = 0; k < d; ++k) s.psi[k] = complex_from_json(e[k]);
      const double norm = s.psi.norm();
      if (!(norm > 0) || !std::isfinite(norm)) throw InvalidInput("state: invalid amplitude vector");
      s.psi /= norm;
      s.rho = s.psi * s.psi.adjoint();
    }
    if (!all_finite(s.rho)) throw InvalidInput("state: non-finite entries");
    return s;
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed state JSON: ") + ex.what());
  }
}

json state_to_json(const std::vector<int>& dims, const StateVector& psi) {
  json amps = json::array();
  for (Eigen::Index k = 0; k < psi.size(); ++k) amps.push_back(complex_to_json(psi[k]));
  return json{{"dims", dims}, {"dim", psi.size()}, {"entries", amps}};
}

json state_to_json(const std::vector<int>& dims, const Operator& rho) {
  json out = operator_to_json(rho);
  out["dims"] = dims;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw InvalidInput("malformed JSON in " + path + ": " + ex.what());
  }
}

PulseSchedule schedule_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("schedule must be a JSON list of segments");
  PulseSchedule s;
  try {
    for (const auto& seg : j) {
      const auto type = seg.at("type").get<std::string>();
      if (type == "evolution")
        s.add_evolution(operator_from_json(seg.at("h")), seg.at("dt").get<double>());
      else if (type == "gate")
        s.add_gate(operator_from_json(seg.at("u")));
      else
        throw InvalidInput("unknown segment type: " + type);
    }
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed schedule JSON: ") + ex.what());
  }
  return s;
}

json cluster_sums_to_json(const ClusterSumTable& t) {
  json rows = json::array();
  const auto nodes = static_cast<int>(t.dims.size());
  for (std::uint64_t s = 0; s < t.y.size(); ++s) {
    std::vector<int> subset;
    for (int mu = 0; mu < nodes; ++mu)
      if ((s >> mu) & 1u) subset.push_back(mu);
    rows.push_back(json{{"subset", subset}, {"Y", t.y[s]}});
  }
  return json{{"dims", t.dims}, {"clusters", rows}, {"total", t.total()}, {"sum_rule_target", t.sum_rule_target}};
}

std::string purity_csv(const PurityReport& r) {
  std::ostringstream os;
  os << "subset,m,p_m,p_m_from_cluster_sums,S_m\n";
  for (const auto& c : r.clusters) {
    std::string subset;
    for (int mu = 0; mu < r.nodes; ++mu)
      if ((c.mask >> mu) & 1u) subset += (subset.empty() ? "" : " ") + std::to_string(mu);
    os << subset << ',' << c.size << ',' << csv_number(c.p_from_purity) << ',' << csv_number(c.p_from_cluster_sums)
       << ',' << csv_number(c.entropy_bits) << '\n';
  }
  return os.str();
}

}  // namespace weylnet
