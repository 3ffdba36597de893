// JSON and markdown reports.

#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lgi/registry.hpp"
#include "lgi/report.hpp"

using namespace lgi::registry;
using namespace lgi::report;
using nlohmann::json;

TEST_SUITE("report") {

TEST_CASE("number formatting") {
  CHECK(fmt15(0.1) == "0.1");
  CHECK(fmt15(1.0 / 3) == "0.333333333333333");
  CHECK(round15(1.0 / 3) == 0.333333333333333);
  CHECK(round15(2.0) == 2.0);
}

TEST_CASE("JSON schema and byte-stable output without timing") {
  Selection sel{.ids = {"I-6.16", "I-2.6", "D-5.18", "P-logxcot"}};
  Report a = run_suite(sel, std::nullopt, {}, 2);
  Report b = run_suite(sel, std::nullopt, {}, 2);
  Report c = run_suite(sel, std::nullopt, {}, 1);
  std::string ja = to_json(a, false), jb = to_json(b, false);
  CHECK(ja == jb);
  // the worker count is recorded in the config, nowhere else
  CHECK(json::parse(ja)["verdicts"] == json::parse(to_json(c, false))["verdicts"]);
  CHECK(ja.find("wall_time") == std::string::npos);
  CHECK(to_json(a, true).find("total_wall_time") != std::string::npos);

  json j = json::parse(ja);
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["config"]["tol_class"] == "per-record");
  CHECK(j["config"]["parallelism"] == 2);
  REQUIRE(j["verdicts"].is_array());
  CHECK(j["verdicts"].size() == a.verdicts.size());
  int sum = 0;
  for (auto& [k, v] : j["summary"]["counts"].items()) sum += v.get<int>();
  CHECK(sum == j["summary"]["total"].get<int>());
  CHECK(j["summary"]["failures"].empty());
  bool saw_disputed = false;
  for (const json& v : j["verdicts"]) {
    for (const char* k : {"id", "anchor", "section", "params", "lhs", "rhs", "residual", "budget", "tol_class",
                          "status", "expected_status"})
      CHECK(v.contains(k));
    CHECK(v["lhs"].contains("abs_err"));
    CHECK(v["lhs"].contains("route"));
    if (v["expected_status"] == "DISPUTED") {
      saw_disputed = true;
      CHECK(v.contains("diagnostics"));
    }
  }
  CHECK(saw_disputed);
}

TEST_CASE("markdown report structure") {
  Report r = run_suite(Selection{.ids = {"I-6.16", "D-4.26", "P-logGcot"}});
  std::string md = to_markdown(r, false);
  CHECK(md.find("I-6.16") != std::string::npos);
  CHECK(md.find("Appendix: disputed items") != std::string::npos);
  CHECK(md.find("Appendix: divergence probes") != std::string::npos);
  CHECK(md.find("wall") == std::string::npos);
  CHECK_FALSE(section_title(6).empty());
}

}  // TEST_SUITE
