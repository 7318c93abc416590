#include "doctest.h"

#include <algorithm>
#include <set>

#include "constructions.hpp"
#include "errors.hpp"
#include "oracle.hpp"

using namespace mcg;

namespace {
WeightedGraph cat(const char* name) { return catalog(name).instance.graph(); }
} // namespace

TEST_CASE("perfect matching counts on the catalog") {
  CHECK(enumerate_perfect_matchings(cat("K2")).size() == 1);
  CHECK(enumerate_perfect_matchings(cat("K3")).empty()); // odd order
  CHECK(enumerate_perfect_matchings(cat("C4")).size() == 2);
  CHECK(enumerate_perfect_matchings(cat("K4")).size() == 3);
  CHECK(enumerate_perfect_matchings(cat("K33")).size() == 6);
  CHECK(enumerate_perfect_matchings(cat("PRISM")).size() == 4); // 3 rungs, or 1 rung + 2 triangle edges
  CHECK(enumerate_perfect_matchings(cat("BOWTIE")).empty()); // odd order
}

TEST_CASE("GSTAR has 144 perfect matchings split 72/72 by weight") {
  // 144 by direct case analysis on how the two independent pairs match into
  // the triangles: the four feasible split patterns contribute 36 each
  WeightedGraph g = cat("GSTAR");
  auto matchings = enumerate_perfect_matchings(g);
  REQUIRE(matchings.size() == 144);
  int light = 0, heavy = 0;
  for (const auto& m : matchings) {
    CHECK(m.size() == 5);
    CHECK(is_perfect_matching(g, m));
    Rational w = edge_set_weight(g, m);
    if (w == 1) ++light;
    else if (w == 3) ++heavy;
    else CHECK(false);
  }
  CHECK(light == 72);
  CHECK(heavy == 72);
}

TEST_CASE("matching enumeration output is canonical and duplicate-free") {
  WeightedGraph g = cat("K33");
  auto matchings = enumerate_perfect_matchings(g);
  for (std::size_t i = 0; i + 1 < matchings.size(); ++i)
    CHECK(edge_set_less(g, matchings[i], matchings[i + 1]));
  for (const auto& m : matchings) CHECK(canonical_edge_set(g, m) == m);
}

TEST_CASE("even cycle enumeration") {
  WeightedGraph c4 = cat("C4");
  auto cycles = enumerate_even_cycles(c4);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].edge_sequence.size() == 4);
  // nu alternates +1/-1 and the lowest edge id gets +1
  CHECK(cycles[0].nu.front().second == 1);
  int plus = 0, minus = 0;
  for (auto [e, s] : cycles[0].nu) (s > 0 ? plus : minus)++;
  CHECK(plus == 2);
  CHECK(minus == 2);

  // triangles contribute nothing even though they are cycles
  CHECK(enumerate_even_cycles(cat("K3")).empty());
  CHECK(enumerate_even_cycles(cat("BOWTIE")).empty());
  CHECK(enumerate_even_cycles(cat("K4")).size() == 3);
}

TEST_CASE("b-factor enumeration") {
  WeightedGraph k3 = cat("K3");
  std::map<std::string, long> b2 = {{"a", 2}, {"b", 2}, {"c", 2}};
  auto factors = enumerate_b_factors(k3, b2);
  REQUIRE(factors.size() == 1); // all three edges
  CHECK(factors[0].size() == 3);
  CHECK(is_b_factor(k3, b2, factors[0]));

  std::map<std::string, long> ones = {{"a", 1}, {"b", 1}, {"c", 1}};
  CHECK(enumerate_b_factors(k3, ones).empty());

  // b == 1 everywhere coincides with perfect matchings
  WeightedGraph k4 = cat("K4");
  std::map<std::string, long> all1;
  for (const std::string& v : k4.nodes()) all1[v] = 1;
  CHECK(enumerate_b_factors(k4, all1) == enumerate_perfect_matchings(k4));
}

TEST_CASE("arborescence enumeration on the golden digraphs") {
  WeightedDigraph d1 = catalog("D1").instance.digraph();
  auto arbs = enumerate_arborescences(d1);
  REQUIRE(arbs.size() == 3);
  for (const auto& a : arbs) {
    CHECK(a.size() == 2);
    CHECK(is_arborescence(d1, a));
  }
  std::multiset<std::string> costs;
  for (const auto& a : arbs) costs.insert(rational_to_string(edge_set_cost(d1, a)));
  CHECK(costs == std::multiset<std::string>{"0", "1", "2"});
}

TEST_CASE("tight cut enumeration") {
  // K4 and C4 have none (too small for a nontrivial odd shore)
  CHECK(enumerate_tight_cuts(cat("K4")).empty());
  CHECK(enumerate_tight_cuts(cat("C4")).empty());

  WeightedGraph grem = cat("GREM");
  auto cuts = enumerate_tight_cuts(grem);
  REQUIRE(cuts.size() == 2);
  // each cut is reported by its lexicographically smaller shore, so the cut
  // around the B triangle shows up as the complement side
  std::set<std::vector<std::string>> shores;
  for (const auto& cut : cuts) shores.insert(node_ids(grem, cut));
  CHECK(shores.count({"a1", "a2", "a3"}) == 1);
  CHECK(shores.count({"a1", "a2", "a3", "x", "y"}) == 1);

  // GSTAR is a brick: no nontrivial tight cuts at all
  CHECK(enumerate_tight_cuts(cat("GSTAR")).empty());
}

TEST_CASE("sampled even walks are closed, even, and seed-stable") {
  WeightedGraph g = cat("PRISM");
  auto w1 = sample_even_closed_walks(g, 12, 8, 42);
  auto w2 = sample_even_closed_walks(g, 12, 8, 42);
  REQUIRE(!w1.empty());
  REQUIRE(w1.size() == w2.size());
  for (std::size_t i = 0; i < w1.size(); ++i) {
    CHECK(w1[i].edge_sequence == w2[i].edge_sequence);
    CHECK(is_closed_walk(g, w1[i].edge_sequence));
    CHECK(w1[i].edge_sequence.size() % 2 == 0);
  }
  auto w3 = sample_even_closed_walks(g, 12, 8, 43);
  bool all_equal = w1.size() == w3.size();
  if (all_equal)
    for (std::size_t i = 0; i < w1.size(); ++i)
      if (w1[i].edge_sequence != w3[i].edge_sequence) all_equal = false;
  CHECK(!all_equal); // different seed, different walks
}

TEST_CASE("budgets stop oversized enumerations") {
  EnumerationBudget tiny;
  tiny.max_nodes = 4;
  CHECK_THROWS_AS(enumerate_perfect_matchings(cat("GSTAR"), tiny), budget_error);
  EnumerationBudget few = matching_budget();
  few.max_items = 10;
  CHECK_THROWS_AS(enumerate_perfect_matchings(cat("GSTAR"), few), budget_error);
}

TEST_CASE("matching covered detection") {
  CHECK(is_matching_covered(cat("K2")));
  CHECK(is_matching_covered(cat("C4")));
  CHECK(is_matching_covered(cat("K4")));
  CHECK(is_matching_covered(cat("K33")));
  CHECK(is_matching_covered(cat("PRISM")));
  CHECK(is_matching_covered(cat("GREM")));
  CHECK(is_matching_covered(cat("GSTAR")));
  CHECK(!is_matching_covered(cat("K3")));     // no perfect matching at all
  CHECK(!is_matching_covered(cat("BOWTIE"))); // odd order
}

TEST_CASE("validators reject wrong sets") {
  WeightedGraph c4 = cat("C4");
  CHECK(is_perfect_matching(c4, {0, 2}));
  CHECK(!is_perfect_matching(c4, {0, 1})); // shares node b
  CHECK(!is_perfect_matching(c4, {0}));    // leaves c, d exposed
  CHECK(is_simple_cycle(c4, {0, 1, 2, 3}));
  CHECK(!is_simple_cycle(c4, {0, 1, 2}));  // not closed
  WeightedDigraph d1 = catalog("D1").instance.digraph();
  CHECK(is_arborescence(d1, {0, 1}));      // r->a, r->b
  CHECK(!is_arborescence(d1, {2, 3}));     // a->b, b->a cycle, root unreachable
}
