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

// Command-line front end. Everything of substance happens behind the C API;
// this file only reads files, parses flags, and routes bytes.

#include "polyaxial.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

int usage(std::FILE* stream) {
  std::fprintf(stream,
               "usage: polyaxial <command> --config <path> [--out <path>]\n"
               "                 [--format json|csv] [--suite <name>]\n"
               "                 [--regen-oracle]\n"
               "\n"
               "commands:\n"
               "  transform   spectrum of the configured function, with\n"
               "              Plancherel and inversion defects\n"
               "  norm        weighted-norm checks and the point-mass table\n"
               "  solve       spectral solve with a regularity ledger\n"
               "  verify      property suites; --suite picks one of bessel,\n"
               "              transform, translation, sobolev, pde, all\n"
               "\n"
               "--regen-oracle (verify only) writes the regenerated\n"
               "expectation table instead of a report.\n"
               "\n"
               "exit codes: 0 all checks passed, 1 at least one check\n"
               "failed, 2 unusable arguments or configuration, 3 numeric\n"
               "failure\n");
  return stream == stderr ? 2 : 0;
}

int fail_usage(const char* message) {
  std::fprintf(stderr, "error: %s\n", message);
  return usage(stderr);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string suite;
  bool regen_oracle = false;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto value = [&](const char* flag) -> const char* {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "error: %s needs a value\n", flag);
        return nullptr;
      }
      return argv[++i];
    };
    if (arg == "--help" || arg == "-h") {
      return usage(stdout);
    } else if (arg == "--config") {
      const char* v = value("--config");
      if (!v) return usage(stderr);
      config_path = v;
    } else if (arg == "--out") {
      const char* v = value("--out");
      if (!v) return usage(stderr);
      out_path = v;
    } else if (arg == "--format") {
      const char* v = value("--format");
      if (!v) return usage(stderr);
      format = v;
    } else if (arg == "--suite") {
      const char* v = value("--suite");
      if (!v) return usage(stderr);
      suite = v;
    } else if (arg == "--regen-oracle") {
      regen_oracle = true;
    } else if (!arg.empty() && arg[0] == '-') {
      std::fprintf(stderr, "error: unknown flag %s\n", arg.c_str());
      return usage(stderr);
    } else if (command.empty()) {
      command = arg;
    } else {
      std::fprintf(stderr, "error: unexpected argument %s\n", arg.c_str());
      return usage(stderr);
    }
  }

  if (command.empty()) return fail_usage("a command is required");
  if (config_path.empty()) return fail_usage("--config is required");
  if (command != "verify" && !suite.empty())
    return fail_usage("only the verify command takes --suite");
  if (command != "verify" && regen_oracle)
    return fail_usage("only the verify command takes --regen-oracle");
  if (!format.empty() && format != "json" && format != "csv")
    return fail_usage("--format must be json or csv");
  if (regen_oracle && format == "csv")
    return fail_usage("the regenerated table is JSON only");

  std::string config_text;
  if (!read_file(config_path, config_text)) {
    std::fprintf(stderr, "error: cannot read config file %s\n",
                 config_path.c_str());
    return 2;
  }

  // The configuration may carry its own output preferences; flags win.
  // Malformed JSON is left for the library, which reports it properly.
  if (out_path.empty() || format.empty()) {
    const auto parsed =
        nlohmann::json::parse(config_text, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_object() && parsed.contains("output") &&
        parsed["output"].is_object()) {
      const auto& output = parsed["output"];
      if (out_path.empty() && output.contains("path") &&
          output["path"].is_string()) {
        out_path = output["path"].get<std::string>();
      }
      if (format.empty() && output.contains("format") &&
          output["format"].is_string()) {
        format = output["format"].get<std::string>();
      }
    }
  }
  if (format.empty()) format = "json";

  nlohmann::json options = nlohmann::json::object();
  if (!suite.empty()) options["suite"] = suite;
  if (regen_oracle) options["regen_oracle"] = true;
  const std::string options_text = options.dump();

  pax_report* report = nullptr;
  const pax_status status = pax_run_command(
      command.c_str(), config_text.c_str(), options_text.c_str(), &report);

  if (status != PAX_OK && status != PAX_TOLERANCE_FAIL) {
    std::fprintf(stderr, "error: %s\n", pax_last_error());
    return status == PAX_INVALID_CONFIG ? 2 : 3;
  }

  const std::string payload =
      format == "csv" ? pax_report_csv(report) : pax_report_json(report);
  int rc = status == PAX_OK ? 0 : 1;
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << payload) || !out.flush()) {
      std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
      rc = 2;
    }
  }
  pax_report_free(report);
  return rc;
}
