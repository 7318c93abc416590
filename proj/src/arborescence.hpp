#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "kbest.hpp"
#include "oracle.hpp"

namespace mcg {

// Nodes unreachable from the root; such a set has no entering edge at all.
// nullopt means every node is reachable.
std::optional<std::vector<std::string>> deficient_set(const WeightedDigraph& d);

// Laminar family of node sets with positive values. An arborescence B is
// optimal iff some feasible dual makes every B-edge tight and every support
// set is entered exactly once; the solver always returns such a pair.
struct DualCertificate {
  std::vector<std::pair<std::vector<std::string>, Rational>> support;
};

bool is_laminar(const DualCertificate& y);

struct OptimalArborescence {
  EdgeIndexSet arborescence; // edge indices sorted by id
  Rational cost;
  DualCertificate dual;      // with cost == sum of support values
};
OptimalArborescence min_cost_arborescence_with_dual(const WeightedDigraph& d);

struct InfeasibleDual {
  std::string detail;
};
struct NonTightEdge {
  std::string edge;
  Rational cost;
  Rational covered; // dual load strictly below cost
};
struct OverEnteredSet {
  std::vector<std::string> set;
  int in_degree; // != 1
};
using OptimalityViolation = std::variant<InfeasibleDual, NonTightEdge, OverEnteredSet>;

// nullopt = the Bock-Fulkerson conditions hold. Checks run in a fixed order:
// dual feasibility over all edges, then tightness of the tree edges in
// document order, then the in-degree of every support set.
std::optional<OptimalityViolation> verify_optimality_conditions(const WeightedDigraph& d,
                                                                const EdgeIndexSet& arb,
                                                                const DualCertificate& y);

// Forcing an edge uv: every other edge into v disappears and v merges into
// u (the merged node keeps u's id). Arborescences through uv correspond
// exactly to arborescences of the result, with costs shifted by cost(uv).
struct ForcedContraction {
  WeightedDigraph digraph;
  std::string merged_node;
  std::vector<std::string> surviving_edges; // document order
  Rational cost_offset;
};
ForcedContraction contract_forced_edge(const WeightedDigraph& d, const std::string& edge_id);

WeightSpectrum arborescence_cost_spectrum(const WeightedDigraph& d,
                                          const EnumerationBudget& budget = arborescence_budget());

// Two edges (possibly equal) of a second-cheapest arborescence such that any
// arborescence containing both costs exactly the second-smallest value.
std::pair<std::string, std::string> forcing_pair_for_second_smallest(
    const WeightedDigraph& d, const EnumerationBudget& budget = arborescence_budget());

struct ArbForcingCertificate {
  std::vector<std::string> forced; // P, sorted edge ids
  int level = 1;
  Rational achieved;
  int bound = 0; // 2(level-1)
};

// Recursive construction: pull a forcing pair out of an level-th cheapest
// arborescence, contract it, and recurse at the strictly smaller level the
// contracted instance assigns to the remainder.
ArbForcingCertificate lth_smallest_arborescence_forcing_set(
    const WeightedDigraph& d, int level, const EnumerationBudget& budget = arborescence_budget());

} // namespace mcg
