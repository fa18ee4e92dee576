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

#include "polyaxial.h"

#include <ctime>
#include <exception>
#include <string>

#include <nlohmann/json.hpp>

#include "bessel.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "verify.hpp"

struct pax_report {
  std::string json;
  std::string csv;
  size_t count = 0;
  bool pass = false;
};

namespace {

thread_local std::string g_last_error;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

struct RunOptions {
  std::string suite = "all";
  bool regen_oracle = false;
  std::string timestamp;  // empty: stamp with the current UTC time
};

RunOptions parse_options(const char* options_json) {
  RunOptions opts;
  if (options_json == nullptr || *options_json == '\0') return opts;
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(options_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw pax::ConfigError(std::string("options are not valid JSON: ") +
                           e.what());
  }
  if (!parsed.is_object())
    throw pax::ConfigError("options must be a JSON object");
  for (const auto& [key, value] : parsed.items()) {
    if (key == "suite") {
      if (!value.is_string())
        throw pax::ConfigError("options.suite must be a string");
      opts.suite = value.get<std::string>();
    } else if (key == "regen_oracle") {
      if (!value.is_boolean())
        throw pax::ConfigError("options.regen_oracle must be a boolean");
      opts.regen_oracle = value.get<bool>();
    } else if (key == "timestamp") {
      if (!value.is_string())
        throw pax::ConfigError("options.timestamp must be a string");
      opts.timestamp = value.get<std::string>();
    } else {
      throw pax::ConfigError("options: unrecognized field \"" + key + "\"");
    }
  }
  return opts;
}

}  // namespace

extern "C" {

pax_status pax_run_command(const char* command, const char* config_json,
                           const char* options_json, pax_report** out) {
  if (out != nullptr) *out = nullptr;
  g_last_error.clear();
  if (command == nullptr || config_json == nullptr || out == nullptr) {
    g_last_error = "command, config_json, and out must be non-null";
    return PAX_INVALID_CONFIG;
  }
  try {
    const std::string cmd = command;
    const RunOptions opts = parse_options(options_json);

    if (opts.regen_oracle) {
      if (cmd != "verify")
        throw pax::ConfigError(
            "regen_oracle is only meaningful for the verify command");
      auto* rep = new pax_report;
      rep->json = pax::regenerate_expectations();
      rep->pass = true;
      *out = rep;
      return PAX_OK;
    }

    const pax::RunConfig config = pax::RunConfig::from_json_text(config_json);
    pax::Report report;
    if (cmd == "transform") {
      report = pax::cmd_transform(config);
    } else if (cmd == "norm") {
      report = pax::cmd_norm(config);
    } else if (cmd == "solve") {
      report = pax::cmd_solve(config);
    } else if (cmd == "verify") {
      report = pax::cmd_verify(config, opts.suite);
    } else {
      throw pax::ConfigError("unknown command \"" + cmd +
                             "\"; expected transform, norm, solve, or verify");
    }

    auto* rep = new pax_report;
    rep->json = report.to_json(opts.timestamp.empty() ? utc_timestamp()
                                                      : opts.timestamp);
    rep->csv = report.to_csv();
    rep->count = report.records.size();
    rep->pass = report.all_pass();
    *out = rep;
    return rep->pass ? PAX_OK : PAX_TOLERANCE_FAIL;
  } catch (const pax::ConfigError& e) {
    g_last_error = e.what();
    return PAX_INVALID_CONFIG;
  } catch (const pax::InvalidArgument& e) {
    g_last_error = e.what();
    return PAX_INVALID_CONFIG;
  } catch (const pax::NumericError& e) {
    g_last_error = e.what();
    return PAX_NUMERIC_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PAX_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return PAX_INTERNAL_ERROR;
  }
}

const char* pax_report_json(const pax_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

const char* pax_report_csv(const pax_report* report) {
  return report == nullptr ? "" : report->csv.c_str();
}

size_t pax_report_record_count(const pax_report* report) {
  return report == nullptr ? 0 : report->count;
}

int pax_report_all_pass(const pax_report* report) {
  return (report != nullptr && report->pass) ? 1 : 0;
}

void pax_report_free(pax_report* report) { delete report; }

const char* pax_last_error(void) { return g_last_error.c_str(); }

pax_status pax_bessel_j(double gamma, double x, double* out) {
  g_last_error.clear();
  if (out == nullptr) {
    g_last_error = "out must be non-null";
    return PAX_INVALID_CONFIG;
  }
  try {
    *out = pax::normalized_bessel(gamma, x);
    return PAX_OK;
  } catch (const pax::InvalidArgument& e) {
    g_last_error = e.what();
    return PAX_INVALID_CONFIG;
  } catch (const pax::NumericError& e) {
    g_last_error = e.what();
    return PAX_NUMERIC_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PAX_INTERNAL_ERROR;
  }
}

const char* pax_version(void) { return "1.0.0"; }

}  // extern "C"
