#include "doctest.h"

#include <string>

#include "json.hpp"

#include "constructions.hpp"
#include "errors.hpp"
#include "report.hpp"

using namespace mcg;
using nlohmann::json;

namespace {
Instance cat(const char* name) { return catalog(name).instance; }
} // namespace

TEST_CASE("reports carry the envelope and are byte stable") {
  Instance inst = cat("K4");
  AnalysisParams params;
  std::string first = run_analysis(inst, "check", params);
  std::string second = run_analysis(inst, "check", params);
  CHECK(first == second);

  json parsed = json::parse(first);
  CHECK(parsed.contains("command"));
  CHECK(parsed.contains("digest"));
  CHECK(parsed.contains("payload"));
  CHECK(parsed.contains("oracle_checks"));
  CHECK(parsed["command"] == "check");
  CHECK(parsed["digest"].get<std::string>().size() == 16);
  for (const json& check : parsed["oracle_checks"]) CHECK(check["pass"] == true);
  CHECK(first.back() == '\n');
}

TEST_CASE("digest distinguishes instances and ignores nothing") {
  CHECK(instance_digest(cat("K4")) == instance_digest(cat("K4")));
  CHECK(instance_digest(cat("K4")) != instance_digest(cat("C4")));
  CHECK(instance_digest(cat("D1")) != instance_digest(cat("D2")));
}

TEST_CASE("construct emits a parseable canonical document") {
  std::string doc = run_construct("GSTAR");
  Instance round = parse_instance(doc);
  CHECK(round == cat("GSTAR"));
  CHECK(serialize_instance(round) == doc);
  CHECK_THROWS_AS(run_construct("NOPE"), input_error);
}

TEST_CASE("commands check their instance type") {
  AnalysisParams params;
  CHECK_THROWS_AS(run_analysis(cat("D1"), "check", params), input_error);
  CHECK_THROWS_AS(run_analysis(cat("K4"), "arb-dual", params), input_error);
  CHECK_THROWS_AS(run_analysis(cat("K4"), "kbest-arb", params), input_error);
  CHECK_THROWS_AS(run_analysis(cat("D1"), "kbest-pm", params), input_error);
  CHECK_THROWS_AS(run_analysis(cat("K4"), "no-such-command", params), input_error);
}

TEST_CASE("oracle command validates its selector") {
  AnalysisParams params;
  params.oracle_which = "pm";
  json parsed = json::parse(run_analysis(cat("C4"), "oracle", params));
  CHECK(parsed["payload"]["count"] == 2);
  params.oracle_which = "bogus";
  CHECK_THROWS_AS(run_analysis(cat("C4"), "oracle", params), input_error);
}

TEST_CASE("oracle walk sampling respects its parameters") {
  AnalysisParams params;
  params.oracle_which = "walks";
  params.walk_count = 5;
  params.walk_max_len = 6;
  params.seed = 11;
  json parsed = json::parse(run_analysis(cat("PRISM"), "oracle", params));
  CHECK(parsed["payload"]["count"].get<int>() <= 5);
  for (const json& walk : parsed["payload"]["walks"])
    CHECK(walk["edges"].size() <= 6);
}

TEST_CASE("kbest-bfactor defaults the demand map to all ones") {
  AnalysisParams params;
  json parsed = json::parse(run_analysis(cat("C4"), "kbest-bfactor", params));
  for (const auto& [node, value] : parsed["payload"]["demand"].items())
    CHECK(value == 1);
  // TRI2 brings its own demand map
  json tri = json::parse(run_analysis(cat("TRI2"), "kbest-bfactor", params));
  for (const auto& [node, value] : tri["payload"]["demand"].items())
    CHECK(value == 2);
}

TEST_CASE("budget overrides flow through and fail loudly") {
  AnalysisParams params;
  params.budget_nodes = 4;
  CHECK_THROWS_AS(run_analysis(cat("GSTAR"), "check", params), budget_error);
  params.budget_nodes = 12;
  CHECK_NOTHROW(run_analysis(cat("GSTAR"), "check", params));
}

TEST_CASE("text rendering keeps every scalar reachable") {
  AnalysisParams params;
  std::string report = run_analysis(cat("K4"), "spaces", params);
  std::string text = render_text(report);
  CHECK(text.find("command: spaces") != std::string::npos);
  CHECK(text.find("dim_node_induced: 4") != std::string::npos);
  CHECK(text.find("rank_identity: true") != std::string::npos);
  CHECK(text.find("{") == std::string::npos); // no raw JSON syntax left over
}

TEST_CASE("decompose payload mirrors the leaf statistics") {
  AnalysisParams params;
  json parsed = json::parse(run_analysis(cat("GREM"), "decompose", params));
  CHECK(parsed["payload"]["bricks"] == 2);
  CHECK(parsed["payload"]["braces"] == 1);
  CHECK(parsed["payload"]["leaves"].size() == 3);
  CHECK(parsed["payload"]["tree"].contains("split"));
  CHECK(parsed["payload"]["tree"]["shore"].size() >= 3);
}

TEST_CASE("level errors keep their categories through the report layer") {
  AnalysisParams params;
  params.ell = 0;
  CHECK_THROWS_AS(run_analysis(cat("K4"), "kbest-pm", params), input_error);
  params.ell = 99;
  CHECK_THROWS_AS(run_analysis(cat("K4"), "kbest-pm", params), not_applicable_error);
}
