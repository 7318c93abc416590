#include "doctest.h"

#include <random>
#include <set>

#include "arborescence.hpp"
#include "kbest.hpp"
#include "random_instances.hpp"
#include "symmetry.hpp"

using namespace mcg;
using namespace mcg::testgen;

namespace {
int held(Verdict v) { return v == Verdict::yes ? 1 : 0; }
} // namespace

TEST_CASE("random matching-covered graphs keep the verdict chain monotone") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedGraph base = random_matching_covered(rng, 8);
    std::vector<WeightedGraph> draws = {with_induced_weights(base, rng),
                                        with_uniform_weights(base, rng)};
    if (auto cut = with_tight_cut_weights(base)) draws.push_back(*cut);
    bool bipartite = std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(base));
    for (const WeightedGraph& g : draws) {
      PropertyReport r = property_report(g); // throws alarm_error on any internal breach
      CHECK(held(r.node_induced) <= held(r.even_walk));
      CHECK(held(r.even_walk) <= held(r.even_cycle));
      CHECK(held(r.even_cycle) <= held(r.matching_equality));
      CHECK(held(r.matching_equality) <= held(r.edge_minmax));
      if (bipartite) {
        CHECK(r.node_induced == r.even_walk);
        CHECK(r.even_walk == r.even_cycle);
        CHECK(r.even_cycle == r.matching_equality);
        CHECK(r.matching_equality == r.edge_minmax);
      }
      // induced weights must land at the top of the chain
    }
    PropertyReport induced = property_report(draws[0]);
    CHECK(induced.node_induced == Verdict::yes);
    CHECK(induced.edge_minmax == Verdict::yes);
  }
}

TEST_CASE("random graphs satisfy the dimension bookkeeping") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.5);
    // space_dimensions raises alarm_error when any formula cross-check fails
    SpaceDimensions s = space_dimensions(g);
    CHECK(s.dim_node_induced == g.node_count() - s.bipartite_components);
    CHECK(s.rank_identity == (s.dim_cycle_space + s.dim_node_induced == g.edge_count()));
  }
}

TEST_CASE("random matching forcing certificates verify against enumeration") {
  std::mt19937 rng(4096);
  for (int trial = 0; trial < 15; ++trial) {
    WeightedGraph g = with_uniform_weights(random_matching_covered(rng, 6), rng);
    WeightSpectrum spectrum = pm_weight_spectrum(g);
    bool bipartite = std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(g));
    for (int level = 1; level <= std::min(spectrum.q(), 3); ++level) {
      ForcingCertificate cert = lth_smallest_pm_forcing_set(g, level);
      CHECK(cert.achieved == spectrum.values[level - 1]);
      int bound = bipartite ? level - 1 : 2 * (level - 1);
      CHECK(cert.bound == bound);
      CHECK(static_cast<int>(cert.forced.size()) <= bound);
      auto re = min_weight_pm_constrained(g, cert.forced, cert.forbidden);
      REQUIRE(re.has_value());
      CHECK(re->weight == cert.achieved);
    }
  }
}

TEST_CASE("random demand reductions preserve the spectrum") {
  std::mt19937 rng(515);
  int done = 0;
  while (done < 12) {
    WeightedGraph g = with_uniform_weights(random_graph(rng, 4 + static_cast<int>(rng() % 3), 0.6), rng);
    std::map<std::string, long> b = random_demand(g, rng);
    // skip isolated-node instances: a zero-degree node can never meet b >= 1
    bool has_isolated = false;
    for (int v = 0; v < g.node_count(); ++v)
      if (g.incident_edges(v).empty()) has_isolated = true;
    if (has_isolated) continue;
    auto factors = enumerate_b_factors(g, b);
    if (factors.empty()) continue;
    ++done;
    WeightSpectrum direct = bfactor_weight_spectrum(g, b);
    GadgetMap gm = bfactor_gadget(g, b);
    // the derived graph is larger than the source; widen the node budget to fit
    EnumerationBudget wide = matching_budget();
    wide.max_nodes = std::max(wide.max_nodes, gm.derived.node_count());
    WeightSpectrum derived = pm_weight_spectrum(gm.derived, wide);
    CHECK(direct.values == derived.values);
    for (const EdgeIndexSet& sel : factors) {
      EdgeIndexSet pm = pm_from_bfactor(gm, sel);
      CHECK(edge_set_weight(gm.derived, pm) == edge_set_weight(g, sel));
      CHECK(bfactor_from_pm(gm, pm) == sel);
    }
    for (int level = 1; level <= std::min(direct.q(), 2); ++level) {
      BFactorCertificate cert = lth_smallest_bfactor(g, b, level);
      CHECK(cert.achieved == direct.values[level - 1]);
      CHECK(static_cast<int>(cert.forced.size() + cert.forbidden.size()) <= cert.bound);
    }
  }
}

TEST_CASE("random digraphs: solver, dual, and forcing sets agree with enumeration") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 25; ++trial) {
    WeightedDigraph d = random_rooted_digraph(rng, 5, 5);
    auto arbs = enumerate_arborescences(d);
    REQUIRE(!arbs.empty());
    Rational best = edge_set_cost(d, arbs.front());
    for (const auto& a : arbs) best = std::min(best, edge_set_cost(d, a));

    OptimalArborescence opt = min_cost_arborescence_with_dual(d);
    CHECK(opt.cost == best);
    CHECK(!verify_optimality_conditions(d, opt.arborescence, opt.dual).has_value());
    CHECK(is_laminar(opt.dual));

    WeightSpectrum spectrum = arborescence_cost_spectrum(d);
    for (int level = 1; level <= std::min(spectrum.q(), 3); ++level) {
      ArbForcingCertificate cert = lth_smallest_arborescence_forcing_set(d, level);
      CHECK(cert.achieved == spectrum.values[level - 1]);
      CHECK(static_cast<int>(cert.forced.size()) <= 2 * (level - 1));
      // re-check by enumeration: cheapest arborescence through P costs x_level
      std::optional<Rational> constrained;
      for (const auto& a : arbs) {
        std::set<std::string> have;
        for (int e : a) have.insert(d.edge(e).id);
        bool all = true;
        for (const std::string& id : cert.forced)
          if (!have.count(id)) all = false;
        if (!all) continue;
        Rational c = edge_set_cost(d, a);
        if (!constrained || c < *constrained) constrained = c;
      }
      REQUIRE(constrained.has_value());
      CHECK(*constrained == cert.achieved);
    }
  }
}
