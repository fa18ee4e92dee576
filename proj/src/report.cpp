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

#include "report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace pax {

namespace {

// Quote a CSV field only when it needs it (comma, quote, or newline).
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// nlohmann's double serialization is shortest-round-trip, which is exactly
// what a regenerable report wants.
std::string number_text(double v) { return nlohmann::json(v).dump(); }

}  // namespace

void Report::add(std::string check_id, std::string paper_ref, double lhs,
                 double rhs, double tolerance, bool pass) {
  records.push_back(CheckRecord{std::move(check_id), std::move(paper_ref),
                                lhs, rhs, tolerance, pass});
}

void Report::sort_by_id() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.check_id < b.check_id;
                   });
}

bool Report::all_pass() const {
  for (const auto& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

std::string Report::to_json(const std::string& timestamp) const {
  nlohmann::ordered_json root;
  root["generated_at"] = timestamp;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["check_id"] = r.check_id;
    rec["paper_ref"] = r.paper_ref;
    rec["lhs"] = r.lhs;
    rec["rhs"] = r.rhs;
    rec["tolerance"] = r.tolerance;
    rec["pass"] = r.pass;
    arr.push_back(std::move(rec));
  }
  root["records"] = std::move(arr);
  for (const auto& [name, payload] : extras) {
    root[name] = nlohmann::ordered_json::parse(payload);
  }
  return root.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::string out = "check_id,paper_ref,lhs,rhs,tolerance,pass\n";
  for (const auto& r : records) {
    out += csv_escape(r.check_id);
    out += ',';
    out += csv_escape(r.paper_ref);
    out += ',';
    out += number_text(r.lhs);
    out += ',';
    out += number_text(r.rhs);
    out += ',';
    out += number_text(r.tolerance);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace pax
