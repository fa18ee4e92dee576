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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "function_spec.hpp"
#include "grid.hpp"

namespace pax {

// Box extents and node counts for one product quadrature grid, one entry
// per axis.
struct GridConfig {
  std::vector<double> radius;
  std::vector<int> nodes;
};

// A fully parsed run configuration. Parsing is strict: every field is
// type-checked, unknown fields are rejected, and errors name the offending
// field so a typo is caught at the door instead of surfacing as a wrong
// number downstream.
//
// Schema (see docs/runconfig.schema.json):
//   alpha      required  array of per-axis exponents, each > -1/2
//   grid       required  {"radius": [..], "nodes": [..]} physical-side grid
//   freq_grid  required  same shape, frequency-side grid
//   function   optional  {"kind": .., "params": {..}} test function
//   s, p, k    optional  numbers (regularity order, integrability, shift)
//   P          optional  array of polynomial coefficients, constant first
//   eps_list   optional  array of dilation scales in (0, 1], decreasing
//   s_list     optional  array of regularity orders for sweeps
//   tolerances optional  object mapping a named check to a positive number
//   output     optional  {"path": .., "format": "json"|"csv"}
struct RunConfig {
  std::vector<double> alpha;
  GridConfig grid;
  GridConfig freq_grid;
  std::optional<FunctionSpec> function;
  std::optional<double> s;
  std::optional<double> p;
  std::optional<double> k;
  std::optional<std::vector<double>> poly;
  std::optional<std::vector<double>> eps_list;
  std::optional<std::vector<double>> s_list;
  std::map<std::string, double> tolerances;
  std::string output_path;          // empty: write to stdout
  std::string output_format = "json";

  // Throws ConfigError naming the failing field on any problem, and
  // InvalidArgument if the alpha exponents are out of range.
  static RunConfig from_json_text(const std::string& text);

  AlphaParams alpha_params() const;
  GridPtr physical_grid() const;
  GridPtr frequency_grid() const;

  // Named tolerance override with a per-check default.
  double tolerance(const std::string& name, double fallback) const;

  // Desk-scale envelope: commands reject configurations whose cost model
  // was never tuned. Throws ConfigError naming the field.
  void require_envelope(int max_dim, int max_nodes_per_axis) const;
};

}  // namespace pax
