#include "doctest.h"

#include <set>

#include "constructions.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "symmetry.hpp"

using namespace mcg;

TEST_CASE("catalog covers the advertised names and rejects others") {
  const auto& names = catalog_names();
  std::set<std::string> expected = {"K2", "K3",     "C4",   "K4",    "K33", "PRISM",
                                    "BOWTIE", "GREM", "GSTAR", "D1",  "D2",  "TRI2"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expected);
  for (const std::string& name : names) {
    CatalogEntry entry = catalog(name);
    CHECK(entry.name == name);
    CHECK(!entry.notes.empty());
  }
  CHECK_THROWS_AS(catalog("Petersen"), input_error);
}

TEST_CASE("catalog shapes") {
  CHECK(catalog("K2").instance.graph().node_count() == 2);
  CHECK(catalog("K33").instance.graph().edge_count() == 9);
  CHECK(catalog("PRISM").instance.graph().edge_count() == 9);
  CHECK(catalog("GREM").instance.graph().node_count() == 8);
  CHECK(catalog("GREM").instance.graph().edge_count() == 18);
  CHECK(catalog("GSTAR").instance.graph().node_count() == 10);
  CHECK(catalog("GSTAR").instance.graph().edge_count() == 30);
  CHECK(catalog("D1").instance.digraph().root() == "r");
  CHECK(catalog("D2").instance.digraph().edge_count() == 4);
  CatalogEntry tri = catalog("TRI2");
  REQUIRE(tri.instance.b.has_value());
  for (const auto& [node, demand] : *tri.instance.b) CHECK(demand == 2);
}

TEST_CASE("GSTAR carries the cut indicator weights") {
  WeightedGraph g = catalog("GSTAR").instance.graph();
  int units = 0;
  for (const GraphEdge& e : g.edges()) {
    if (e.weight == 1) ++units;
    else CHECK(e.weight == 0);
  }
  CHECK(units == 12);
}

TEST_CASE("two-block weights on the bowtie") {
  auto w = ecs_not_nind_weights(catalog("BOWTIE").instance.graph());
  REQUIRE(w.has_value());
  std::set<std::string> values;
  for (const auto& [edge, value] : *w) values.insert(rational_to_string(value));
  CHECK(values == std::set<std::string>{"1", "2"});
}

TEST_CASE("two-block weights need two non-bipartite blocks") {
  CHECK(!ecs_not_nind_weights(catalog("K4").instance.graph()).has_value());
  CHECK(!ecs_not_nind_weights(catalog("C4").instance.graph()).has_value());
  CHECK(!ecs_not_nind_weights(catalog("GREM").instance.graph()).has_value());
}

TEST_CASE("cut indicator weights on GREM equalize matchings without a potential") {
  WeightedGraph grem = catalog("GREM").instance.graph();
  auto w = meq_not_nind_weights(grem);
  REQUIRE(w.has_value());
  // indicator: 1 on cut edges, 0 elsewhere
  int ones = 0, zeros = 0;
  for (const auto& [edge, value] : *w) {
    if (value == 1) ++ones;
    else if (value == 0) ++zeros;
    else CHECK(false);
  }
  CHECK(ones + zeros == grem.edge_count());
  WeightedGraph weighted = grem.with_weights(*w);
  auto equal = check_pm_equality(weighted);
  REQUIRE(std::holds_alternative<Rational>(equal));
  CHECK(std::get<Rational>(equal) == 1);
}

TEST_CASE("cut indicator weights need a cut with two non-bipartite sides") {
  // K33 and C4 are braces: every tight-cut side stays bipartite (no cuts at all here)
  CHECK(!meq_not_nind_weights(catalog("K33").instance.graph()).has_value());
  CHECK(!meq_not_nind_weights(catalog("C4").instance.graph()).has_value());
  // not matching covered at all
  CHECK_THROWS_AS(meq_not_nind_weights(catalog("K3").instance.graph()), not_applicable_error);
}

TEST_CASE("the fixed min-max counterexample checks itself") {
  EmxCounterexample ex = emx_counterexample();
  CHECK(ex.graph.node_count() == 10);
  CHECK(ex.graph.edge_count() == 30);
  CHECK(ex.weights.size() == 30);
  // weights are baked into the graph and the map agrees with them
  for (const GraphEdge& e : ex.graph.edges()) CHECK(ex.weights.at(e.id) == e.weight);
  CHECK(!check_edge_minmax(ex.graph).has_value());
  CHECK(std::holds_alternative<MatchingPair>(check_pm_equality(ex.graph)));
}
