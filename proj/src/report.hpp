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

#include <string>
#include <utility>
#include <vector>

namespace pax {

// One verified property: what was checked (check_id), the identity or
// inequality it certifies (paper_ref, a plain math formula), the two sides
// as computed, the tolerance applied, and the outcome.
struct CheckRecord {
  std::string check_id;
  std::string paper_ref;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// An ordered collection of check records plus optional named JSON payloads
// (e.g. the spectral samples a transform run produces).
struct Report {
  std::vector<CheckRecord> records;
  std::vector<std::pair<std::string, std::string>> extras;  // name -> JSON

  void add(std::string check_id, std::string paper_ref, double lhs,
           double rhs, double tolerance, bool pass);
  // Assembly order is by check_id, independent of execution order.
  void sort_by_id();
  bool all_pass() const;

  // JSON object {"generated_at": <timestamp>, "records": [...], <extras>}.
  // The timestamp is the only non-deterministic content and sits alone on
  // one line; pass the same timestamp to reproduce a byte-identical file.
  std::string to_json(const std::string& timestamp) const;

  // CSV with header check_id,paper_ref,lhs,rhs,tolerance,pass. Carries no
  // timestamp, so identical inputs give byte-identical output.
  std::string to_csv() const;
};

}  // namespace pax
