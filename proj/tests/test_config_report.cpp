#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "verify.hpp"

using pax::CheckRecord;
using pax::ConfigError;
using pax::Report;
using pax::RunConfig;

namespace {

// A 1-axis configuration matching configs/reference_1d.json.
const char* kReference1d = R"json({
  "alpha": [0.0],
  "grid": {"radius": [14.0], "nodes": [200]},
  "freq_grid": {"radius": [12.0], "nodes": [180]},
  "function": {"kind": "gaussian", "params": {"scale": 1.0}},
  "s": 1.0,
  "p": 2.0,
  "k": 1.0,
  "eps_list": [0.5, 0.25, 0.125],
  "s_list": [0.0, 0.5, 1.0]
})json";

const char* kReference2d = R"json({
  "alpha": [0.0, 1.0],
  "grid": {"radius": [10.0, 10.0], "nodes": [48, 48]},
  "freq_grid": {"radius": [8.0, 8.0], "nodes": [40, 40]},
  "function": {"kind": "gaussian", "params": {"scale": 1.0}}
})json";

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const pax::Error& e) {
    return e.what();
  }
  return "";
}

const CheckRecord* find_record(const Report& r, const std::string& id) {
  for (const auto& rec : r.records) {
    if (rec.check_id == id) return &rec;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("report sorting, pass logic, and rendering") {
  Report r;
  r.add("b.02.second", "x <= y", 1.0, 2.0, 0.0, true);
  r.add("a.01.first", "u = v", 3.0, 3.0, 1e-12, true);
  r.add("b.01.mid", "w >= 0", -1.0, 0.0, 0.0, false);
  CHECK_FALSE(r.all_pass());
  r.sort_by_id();
  CHECK(r.records[0].check_id == "a.01.first");
  CHECK(r.records[1].check_id == "b.01.mid");
  CHECK(r.records[2].check_id == "b.02.second");

  const std::string csv = r.to_csv();
  CHECK(csv.rfind("check_id,paper_ref,lhs,rhs,tolerance,pass\n", 0) == 0);
  CHECK(csv.find("a.01.first,u = v,3.0,3.0,1e-12,true\n") !=
        std::string::npos);
  CHECK(csv.find("b.01.mid,w >= 0,-1.0,0.0,0.0,false\n") !=
        std::string::npos);

  const std::string js = r.to_json("2026-01-02T03:04:05Z");
  CHECK(js.find("\"generated_at\": \"2026-01-02T03:04:05Z\"") !=
        std::string::npos);
  const auto parsed = nlohmann::json::parse(js);
  CHECK(parsed["records"].size() == 3);
  CHECK(parsed["records"][0]["check_id"] == "a.01.first");
  CHECK(parsed["records"][2]["pass"] == true);

  // Identical content renders identically, byte for byte.
  CHECK(js == r.to_json("2026-01-02T03:04:05Z"));
  CHECK(csv == r.to_csv());
}

TEST_CASE("csv quoting protects commas and quotes") {
  Report r;
  r.add("q.01", "f(a, b) = \"both\"", 0.5, 0.25, 0.0, true);
  const std::string csv = r.to_csv();
  CHECK(csv.find("q.01,\"f(a, b) = \"\"both\"\"\",0.5,0.25,0.0,true\n") !=
        std::string::npos);
}

TEST_CASE("json payloads ride along after the records") {
  Report r;
  r.add("p.01", "ok", 1.0, 1.0, 0.0, true);
  r.extras.emplace_back("spectrum", std::string("{\"values\": [1.0, 2.0]}"));
  const auto parsed = nlohmann::json::parse(r.to_json("T"));
  REQUIRE(parsed.contains("spectrum"));
  CHECK(parsed["spectrum"]["values"][1] == 2.0);
}

TEST_CASE("a full configuration parses with every field") {
  const RunConfig c = RunConfig::from_json_text(kReference1d);
  CHECK(c.alpha == std::vector<double>{0.0});
  CHECK(c.grid.nodes == std::vector<int>{200});
  CHECK(c.freq_grid.radius == std::vector<double>{12.0});
  REQUIRE(c.function.has_value());
  CHECK(c.function->kind() == "gaussian");
  CHECK(c.s == 1.0);
  CHECK(c.k == 1.0);
  REQUIRE(c.eps_list.has_value());
  CHECK(c.eps_list->size() == 3);
  CHECK(c.output_format == "json");
  CHECK(c.output_path.empty());

  CHECK(c.tolerance("plancherel", 1e-6) == 1e-6);
  const auto grid = c.physical_grid();
  CHECK(grid->size() == 200);
  const auto freq = c.frequency_grid();
  CHECK(freq->axis(0).radius == 12.0);
}

TEST_CASE("tolerance overrides are honored") {
  const RunConfig c = RunConfig::from_json_text(R"({
    "alpha": [0.0],
    "grid": {"radius": [10.0], "nodes": [32]},
    "freq_grid": {"radius": [8.0], "nodes": [24]},
    "tolerances": {"plancherel": 0.125}
  })");
  CHECK(c.tolerance("plancherel", 1e-6) == 0.125);
  CHECK(c.tolerance("inversion", 1e-6) == 1e-6);
}

TEST_CASE("config rejections name the failing field") {
  using pax::InvalidArgument;
  auto parse = [](const std::string& text) {
    return [text] { RunConfig::from_json_text(text); };
  };

  CHECK(error_text(parse("not json")).find("not valid JSON") !=
        std::string::npos);
  CHECK(error_text(parse("[1,2]")).find("root must be a JSON object") !=
        std::string::npos);
  CHECK(error_text(parse("{}")).find("alpha is required") !=
        std::string::npos);
  CHECK(error_text(parse(R"({"alpha": "x"})")).find("alpha must be a") !=
        std::string::npos);
  CHECK(error_text(parse(R"({"alpha": []})")).find("alpha must be a") !=
        std::string::npos);
  CHECK(error_text(parse(R"({"alpha": [0.0, "y"]})")).find("alpha[1]") !=
        std::string::npos);
  CHECK(error_text(parse(R"({"alpha": [0.0]})")).find("grid is required") !=
        std::string::npos);

  const std::string g = R"({"alpha": [0.0], "grid": )";
  CHECK(error_text(parse(g + R"(5})")).find("grid must be an object") !=
        std::string::npos);
  CHECK(error_text(parse(g + R"({"nodes": [8]}})"))
            .find("grid.radius is required") != std::string::npos);
  CHECK(error_text(parse(g + R"({"radius": [1.0, 2.0], "nodes": [8]}})"))
            .find("grid.radius length must match alpha") != std::string::npos);
  CHECK(error_text(parse(g + R"({"radius": [-1.0], "nodes": [8]}})"))
            .find("grid.radius[0] must be positive") != std::string::npos);
  CHECK(error_text(parse(g + R"({"radius": [1.0], "nodes": [1]}})"))
            .find("grid.nodes[0] must be at least 2") != std::string::npos);
  CHECK(error_text(parse(g + R"({"radius": [1.0], "nodes": [2000]}})"))
            .find("grid.nodes[0] exceeds the 1024-node cap") !=
        std::string::npos);
  CHECK(error_text(parse(g + R"({"radius": [1.0], "nodes": [8.5]}})"))
            .find("grid.nodes[0] must be an integer") != std::string::npos);

  const std::string base =
      R"({"alpha": [0.0], "grid": {"radius": [10.0], "nodes": [16]},
          "freq_grid": {"radius": [8.0], "nodes": [16]})";
  CHECK(error_text(parse(base + R"(, "bogus": 1})"))
            .find("unrecognized field \"bogus\"") != std::string::npos);
  CHECK(error_text(parse(base + R"(, "p": 0.5})"))
            .find("p must lie in [1, inf)") != std::string::npos);
  CHECK(error_text(parse(base + R"(, "s": "big"})"))
            .find("s must be a number") != std::string::npos);
  CHECK(error_text(parse(base + R"(, "tolerances": {"x": -1.0}})"))
            .find("tolerances.x must be positive") != std::string::npos);
  CHECK(error_text(parse(base + R"(, "output": {"format": "xml"}})"))
            .find("output.format must be") != std::string::npos);
  CHECK(error_text(parse(base + R"(, "output": {"dest": "f"}})"))
            .find("output: unrecognized field \"dest\"") != std::string::npos);
  CHECK(error_text(parse(base +
                         R"(, "function": {"kind": "mystery", "params": {}}})"))
            .find("function:") != std::string::npos);

  // Out-of-range exponents surface the axis at parse time.
  const std::string bad_alpha = error_text(parse(
      R"({"alpha": [-0.6], "grid": {"radius": [10.0], "nodes": [16]},
          "freq_grid": {"radius": [8.0], "nodes": [16]}})"));
  CHECK(bad_alpha.find("alpha[0]") != std::string::npos);
  CHECK_THROWS_AS(RunConfig::from_json_text(
                      R"({"alpha": [-0.6],
                          "grid": {"radius": [10.0], "nodes": [16]},
                          "freq_grid": {"radius": [8.0], "nodes": [16]}})"),
                  InvalidArgument);
}

TEST_CASE("the desk-scale envelope rejects oversized runs") {
  const RunConfig c1 = RunConfig::from_json_text(kReference1d);
  CHECK_NOTHROW(c1.require_envelope(2, 256));
  CHECK(error_text([&] { c1.require_envelope(2, 128); })
            .find("grid.nodes[0] exceeds the per-axis cap of 128") !=
        std::string::npos);

  const RunConfig c3 = RunConfig::from_json_text(R"({
    "alpha": [0.0, 0.0, 0.0],
    "grid": {"radius": [6.0, 6.0, 6.0], "nodes": [12, 12, 12]},
    "freq_grid": {"radius": [5.0, 5.0, 5.0], "nodes": [10, 10, 10]}
  })");
  CHECK_NOTHROW(c3.require_envelope(3, 256));
  CHECK(error_text([&] { c3.require_envelope(2, 256); })
            .find("supports at most 2") != std::string::npos);
}

TEST_CASE("transform command reports defects and carries the spectrum") {
  const RunConfig c = RunConfig::from_json_text(kReference1d);
  const Report r = pax::cmd_transform(c);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].check_id == "transform_cmd.01.plancherel");
  CHECK(r.records[1].check_id == "transform_cmd.02.inversion");
  CHECK(r.all_pass());
  REQUIRE(r.extras.size() == 1);
  CHECK(r.extras[0].first == "spectrum");
  const auto payload = nlohmann::json::parse(r.extras[0].second);
  CHECK(payload["domain"] == "frequency");
  CHECK(payload["values"].size() == 180);

  // Missing function is a configuration error that names the field.
  RunConfig no_fn = c;
  no_fn.function.reset();
  CHECK(error_text([&] { pax::cmd_transform(no_fn); })
            .find("function is required") != std::string::npos);
}

TEST_CASE("a grid too coarse to resolve the function fails tolerance") {
  const RunConfig c = RunConfig::from_json_text(R"({
    "alpha": [0.0],
    "grid": {"radius": [14.0], "nodes": [8]},
    "freq_grid": {"radius": [12.0], "nodes": [8]},
    "function": {"kind": "gaussian", "params": {"scale": 1.0}}
  })");
  const Report r = pax::cmd_transform(c);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("norm command: identity, sweep, and membership table") {
  const RunConfig c = RunConfig::from_json_text(kReference1d);
  const Report r = pax::cmd_norm(c);
  REQUIRE(r.records.size() == 9);
  CHECK(r.all_pass());

  const auto* l2 = find_record(r, "norm_cmd.01.l2_identity");
  REQUIRE(l2 != nullptr);
  CHECK(std::fabs(l2->lhs - l2->rhs) <= l2->tolerance);

  const auto* requested = find_record(r, "norm_cmd.02.requested_norm");
  REQUIRE(requested != nullptr);
  CHECK(requested->lhs == doctest::Approx(1.5811388300841898).epsilon(1e-6));

  // Point-mass membership rows: (s=-2, p=1) gives index -3.5 against -n=-1,
  // so lhs < rhs reads "member".
  const auto* a = find_record(r, "norm_cmd.04.dirac_a");
  REQUIRE(a != nullptr);
  CHECK(a->lhs == doctest::Approx(-3.5));
  CHECK(a->rhs == -1.0);
  CHECK(a->paper_ref.find("member=yes") != std::string::npos);
  const auto* d = find_record(r, "norm_cmd.07.dirac_d");
  REQUIRE(d != nullptr);
  CHECK(d->lhs > d->rhs);
  CHECK(d->paper_ref.find("member=no") != std::string::npos);
}

TEST_CASE("solve command covers both symbol families") {
  RunConfig c = RunConfig::from_json_text(kReference1d);

  const Report helm = pax::cmd_solve(c);
  REQUIRE(helm.records.size() == 3);
  CHECK(helm.all_pass());
  const auto* reg = find_record(helm, "solve_cmd.02.regularity");
  REQUIRE(reg != nullptr);
  CHECK(reg->rhs == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(helm.extras.size() == 1);
  CHECK(helm.extras[0].first == "solution_spectrum");

  RunConfig quartic = c;
  quartic.k.reset();
  quartic.poly = std::vector<double>{4.0, 0.0, 1.0};
  quartic.s = 0.0;
  const Report poly = pax::cmd_solve(quartic);
  CHECK(poly.all_pass());
  const auto* reg2 = find_record(poly, "solve_cmd.02.regularity");
  REQUIRE(reg2 != nullptr);
  CHECK(reg2->rhs == doctest::Approx(1.25).epsilon(1e-6));

  RunConfig both = c;
  both.poly = std::vector<double>{1.0, 1.0};
  CHECK(error_text([&] { pax::cmd_solve(both); })
            .find("mutually exclusive") != std::string::npos);

  RunConfig neither = c;
  neither.k.reset();
  CHECK(error_text([&] { pax::cmd_solve(neither); })
            .find("either k or P is required") != std::string::npos);

  RunConfig zero = c;
  zero.k = 0.0;
  CHECK_THROWS_AS(pax::cmd_solve(zero), pax::InvalidArgument);
}

TEST_CASE("verify: the bessel suite stands alone") {
  const RunConfig c = RunConfig::from_json_text(kReference1d);
  const Report r = pax::cmd_verify(c, "bessel");
  CHECK(r.records.size() == 6);
  CHECK(r.all_pass());
  CHECK(error_text([&] { pax::cmd_verify(c, "nope"); })
            .find("unknown suite \"nope\"") != std::string::npos);
}

TEST_CASE("verify: the full battery passes on the 1-axis reference setup") {
  const RunConfig c = RunConfig::from_json_text(kReference1d);
  const Report r = pax::cmd_verify(c, "all");
  CHECK(r.records.size() >= 25);
  for (const auto& rec : r.records) {
    INFO(rec.check_id, ": lhs=", rec.lhs, " rhs=", rec.rhs,
         " tol=", rec.tolerance);
    CHECK(rec.pass);
  }

  CHECK(std::is_sorted(r.records.begin(), r.records.end(),
                       [](const CheckRecord& x, const CheckRecord& y) {
                         return x.check_id < y.check_id;
                       }));

  const auto* h1 = find_record(r, "sobolev.04.h1_reference");
  REQUIRE(h1 != nullptr);
  CHECK(h1->rhs == 1.5811388300841898);
  const auto* quart = find_record(r, "pde.06.regularity_quartic_gain2");
  REQUIRE(quart != nullptr);
  CHECK(quart->rhs == doctest::Approx(1.25).epsilon(1e-6));
  CHECK(find_record(r, "translation.13.self_convolution_at_one") != nullptr);
  CHECK(find_record(r, "sobolev.21.dirac_member_narrow") != nullptr);

  // Byte determinism of the rendered artifacts.
  const Report again = pax::cmd_verify(c, "all");
  CHECK(r.to_csv() == again.to_csv());
  CHECK(r.to_json("T") == again.to_json("T"));
}

TEST_CASE("verify: the battery adapts to a 2-axis weighted setup") {
  const RunConfig c = RunConfig::from_json_text(kReference2d);
  const Report r = pax::cmd_verify(c, "translation");
  CHECK(r.records.size() >= 8);
  for (const auto& rec : r.records) {
    INFO(rec.check_id, ": lhs=", rec.lhs, " rhs=", rec.rhs,
         " tol=", rec.tolerance);
    CHECK(rec.pass);
  }
  // Single-axis-only records stay out of the 2-axis report.
  CHECK(find_record(r, "translation.13.self_convolution_at_one") == nullptr);
  CHECK(find_record(r, "translation.14.commutativity") == nullptr);
}

TEST_CASE("frozen expectations agree with a from-scratch regeneration") {
  const std::string text = pax::regenerate_expectations();
  const auto parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.contains("entries"));
  const auto& table = pax::expectation_table();
  CHECK(parsed["entries"].size() == table.size());
  for (const auto& [name, frozen] : table) {
    REQUIRE(parsed["entries"].contains(name));
    const double fresh = parsed["entries"][name].get<double>();
    INFO(name, ": frozen=", frozen, " fresh=", fresh);
    CHECK(std::fabs(fresh - frozen) <= 5e-12 * std::fabs(frozen));
  }

  // The committed artifact is the regeneration output, byte for byte.
  CHECK(text == pax::regenerate_expectations());
}
