// polyaxial: numerical harmonic analysis on the positive orthant with
// power-weighted measures.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace pax {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ConfigError(message);
}

double require_number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) fail(field + " must be finite");
  return v;
}

std::vector<double> require_number_array(const json& j,
                                         const std::string& field) {
  if (!j.is_array() || j.empty())
    fail(field + " must be a nonempty array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(
        require_number(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

GridConfig parse_grid(const json& j, const std::string& field,
                      size_t dim) {
  if (!j.is_object()) fail(field + " must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "radius" && key != "nodes")
      fail(field + ": unrecognized field \"" + key + "\"");
  }
  if (!j.contains("radius")) fail(field + ".radius is required");
  if (!j.contains("nodes")) fail(field + ".nodes is required");

  GridConfig g;
  g.radius = require_number_array(j["radius"], field + ".radius");
  if (g.radius.size() != dim)
    fail(field + ".radius length must match alpha");
  for (size_t i = 0; i < g.radius.size(); ++i) {
    if (g.radius[i] <= 0.0)
      fail(field + ".radius[" + std::to_string(i) + "] must be positive");
  }

  const json& nodes = j["nodes"];
  if (!nodes.is_array() || nodes.empty())
    fail(field + ".nodes must be a nonempty array of integers");
  if (nodes.size() != dim) fail(field + ".nodes length must match alpha");
  for (size_t i = 0; i < nodes.size(); ++i) {
    const std::string name = field + ".nodes[" + std::to_string(i) + "]";
    if (!nodes[i].is_number_integer()) fail(name + " must be an integer");
    long long n = nodes[i].get<long long>();
    if (n < 2) fail(name + " must be at least 2");
    if (n > 1024) fail(name + " exceeds the 1024-node cap");
    g.nodes.push_back(static_cast<int>(n));
  }
  return g;
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("config root must be a JSON object");

  static const std::set<std::string> known = {
      "alpha",    "grid",   "freq_grid", "function",   "s",     "p",
      "k",        "P",      "eps_list",  "s_list",     "tolerances",
      "output"};
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (!known.count(key)) fail("unrecognized field \"" + key + "\"");
  }

  RunConfig c;
  if (!root.contains("alpha")) fail("alpha is required");
  c.alpha = require_number_array(root["alpha"], "alpha");
  // Surfaces out-of-range exponents now, with the axis named, rather than
  // at first grid construction.
  (void)AlphaParams(c.alpha);

  if (!root.contains("grid")) fail("grid is required");
  c.grid = parse_grid(root["grid"], "grid", c.alpha.size());
  if (!root.contains("freq_grid")) fail("freq_grid is required");
  c.freq_grid = parse_grid(root["freq_grid"], "freq_grid", c.alpha.size());

  if (root.contains("function")) {
    try {
      c.function = FunctionSpec::from_json(root["function"].dump());
    } catch (const Error& e) {
      fail(std::string("function: ") + e.what());
    }
  }

  if (root.contains("s")) c.s = require_number(root["s"], "s");
  if (root.contains("p")) {
    c.p = require_number(root["p"], "p");
    if (*c.p < 1.0) fail("p must lie in [1, inf)");
  }
  if (root.contains("k")) c.k = require_number(root["k"], "k");
  if (root.contains("P")) c.poly = require_number_array(root["P"], "P");
  if (root.contains("eps_list"))
    c.eps_list = require_number_array(root["eps_list"], "eps_list");
  if (root.contains("s_list"))
    c.s_list = require_number_array(root["s_list"], "s_list");

  if (root.contains("tolerances")) {
    const json& tols = root["tolerances"];
    if (!tols.is_object()) fail("tolerances must be an object");
    for (const auto& [key, value] : tols.items()) {
      double v = require_number(value, "tolerances." + key);
      if (v <= 0.0) fail("tolerances." + key + " must be positive");
      c.tolerances[key] = v;
    }
  }

  if (root.contains("output")) {
    const json& out = root["output"];
    if (!out.is_object()) fail("output must be an object");
    for (const auto& [key, value] : out.items()) {
      (void)value;
      if (key != "path" && key != "format")
        fail("output: unrecognized field \"" + key + "\"");
    }
    if (out.contains("path")) {
      if (!out["path"].is_string()) fail("output.path must be a string");
      c.output_path = out["path"].get<std::string>();
    }
    if (out.contains("format")) {
      if (!out["format"].is_string())
        fail("output.format must be \"json\" or \"csv\"");
      c.output_format = out["format"].get<std::string>();
      if (c.output_format != "json" && c.output_format != "csv")
        fail("output.format must be \"json\" or \"csv\"");
    }
  }
  return c;
}

AlphaParams RunConfig::alpha_params() const { return AlphaParams(alpha); }

GridPtr RunConfig::physical_grid() const {
  return build_grid(alpha_params(), grid.radius, grid.nodes);
}

GridPtr RunConfig::frequency_grid() const {
  return build_grid(alpha_params(), freq_grid.radius, freq_grid.nodes);
}

double RunConfig::tolerance(const std::string& name, double fallback) const {
  auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

void RunConfig::require_envelope(int max_dim, int max_nodes_per_axis) const {
  if (alpha.size() > static_cast<size_t>(max_dim))
    fail("alpha has " + std::to_string(alpha.size()) +
         " axes; this command supports at most " + std::to_string(max_dim));
  for (const GridConfig* g : {&grid, &freq_grid}) {
    for (size_t i = 0; i < g->nodes.size(); ++i) {
      if (g->nodes[i] > max_nodes_per_axis)
        fail((g == &grid ? std::string("grid.nodes[")
                         : std::string("freq_grid.nodes[")) +
             std::to_string(i) + "] exceeds the per-axis cap of " +
             std::to_string(max_nodes_per_axis) + " for this command");
    }
  }
}

}  // namespace pax
