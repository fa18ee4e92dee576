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
#include <string>

#include "config.hpp"
#include "report.hpp"

namespace pax {

// The four run modes behind the command-line tool and the C API. Each takes
// a parsed configuration, performs its computation, and returns a report;
// they throw ConfigError / InvalidArgument for unusable configurations and
// NumericError when a computation degenerates.

// Transforms the configured function and reports Plancherel and inversion
// defects; the spectral samples ride along as a JSON payload.
Report cmd_transform(const RunConfig& config);

// Reports weighted-norm checks for the configured function: the L2 identity
// at order zero, the requested (s, p) norm, monotonicity across s_list, and
// a point-mass membership table.
Report cmd_norm(const RunConfig& config);

// Spectrally solves (k^2 - Delta) u = f or P(-Delta) u = f and reports the
// round-trip residual plus a regularity ledger row.
Report cmd_solve(const RunConfig& config);

// Runs one named property suite ("bessel", "transform", "translation",
// "sobolev", "pde") or every one of them ("all") at the configured
// exponents and grids. Record ids sort lexicographically into logical
// order: <suite>.<NN>.<slug>.
Report cmd_verify(const RunConfig& config, const std::string& suite);

// Frozen expected values the suites compare against (name -> value). The
// companion JSON artifact is produced by regenerate_expectations(); a unit
// test pins the two against each other so drift in either is caught.
const std::map<std::string, double>& expectation_table();

// Recomputes every expectation from scratch on fresh elevated-resolution
// grids, checks each is refinement-stable, and renders the table as JSON.
// Throws NumericError if any entry fails to stabilize.
std::string regenerate_expectations();

}  // namespace pax
