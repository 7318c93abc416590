#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"

namespace mcg {

// Five nested weight-symmetry properties, each decided exactly and each
// returning a machine-checkable witness:
//   node-induced        w(uv) = f(u) + f(v) for some node potential f
//   even-walk symmetry  every closed even walk has alternating weight 0
//   even-cycle symmetry w is orthogonal to every alternating cycle vector
//   matching equality   all perfect matchings weigh the same
//   edge min-max        every edge lies in a minimum and a maximum matching
// On matching-covered graphs each property implies the next.

struct NodePotential {
  std::map<std::string, Rational> values;
};

// y with zero incidence sum at every node and nonzero weighted sum: a proof
// that no node potential induces w.
struct PotentialObstruction {
  std::map<std::string, Rational> edge_coefficients;
  Rational weighted_sum;
};

using NodeInducedResult = std::variant<NodePotential, PotentialObstruction>;
NodeInducedResult check_node_induced(const WeightedGraph& g);

// Closed even walk whose alternating weight sum is nonzero.
struct UnbalancedWalk {
  std::vector<int> edge_sequence;
  Rational alternating_sum;
};

// Constructive route: build the candidate potential from fixed walks (an odd
// closed walk through each node in non-bipartite components, alternating
// paths from an anchor in bipartite ones), then sweep all edges. Failure of
// the sweep yields an unbalanced even closed walk.
using WalkPotentialResult = std::variant<NodePotential, UnbalancedWalk>;
WalkPotentialResult reconstruct_potential_by_walks(const WeightedGraph& g);

Rational alternating_weight(const WeightedGraph& g, const std::vector<int>& edge_sequence);

struct CycleViolation {
  AlternatingCycle cycle;
  Rational imbalance; // w . nu, nonzero
};
std::optional<CycleViolation> check_even_cycle_symmetry(const WeightedGraph& g,
                                                        const EnumerationBudget& budget = matching_budget());
// Same verdict via orthogonality of w to a row basis of the cycle space.
bool even_cycle_symmetry_by_basis(const WeightedGraph& g,
                                  const EnumerationBudget& budget = matching_budget());

struct MatchingPair {
  EdgeIndexSet lighter, heavier;
  Rational lighter_weight, heavier_weight;
};
using MatchingEqualityResult = std::variant<Rational, MatchingPair>; // common weight | witness
MatchingEqualityResult check_pm_equality(const WeightedGraph& g,
                                         const EnumerationBudget& budget = matching_budget());

struct EdgeExtremeViolation {
  int edge;
  bool min_side;          // true: min over matchings through edge > global min
  Rational edge_extreme;
  Rational global_extreme;
};
std::optional<EdgeExtremeViolation> check_edge_minmax(const WeightedGraph& g,
                                                      const EnumerationBudget& budget = matching_budget());

// nullopt iff the edge min-max property holds; errors when all matchings
// have equal weight (no extreme to shift).
std::optional<EdgeExtremeViolation> find_extreme_shifting_edge(const WeightedGraph& g,
                                                               const EnumerationBudget& budget = matching_budget());

struct SpaceDimensions {
  int dim_node_induced;                    // rank of the node-to-edge incidence map
  int dim_cycle_space;                     // rank of the alternating cycle vectors
  std::optional<int> dim_matching_span;    // rank of matching characteristic vectors
  std::optional<int> dim_matching_equality;// |E| - (dim_matching_span - 1)
  int bipartite_components;
  int formula_node_induced;                // |V| - bipartite_components
  std::optional<int> brick_count;          // from the tight cut decomposition
  std::optional<int> formula_matching_span;     // |E| - |V| + 2 - bricks
  std::optional<int> formula_matching_equality; // |V| - 1 + bricks
  bool rank_identity;                      // dim_cycle_space + dim_node_induced == |E|
  bool at_most_one_nonbipartite_block;
};
SpaceDimensions space_dimensions(const WeightedGraph& g,
                                 const EnumerationBudget& budget = matching_budget());

enum class Verdict { yes, no, not_applicable };
const char* verdict_name(Verdict v);

struct PropertyReport {
  bool matching_covered = false;
  Verdict node_induced = Verdict::not_applicable;
  Verdict even_walk = Verdict::not_applicable;
  Verdict even_cycle = Verdict::not_applicable;
  Verdict matching_equality = Verdict::not_applicable;
  Verdict edge_minmax = Verdict::not_applicable;
  std::optional<NodePotential> potential;
  std::optional<PotentialObstruction> obstruction;
  std::optional<UnbalancedWalk> walk_witness;
  std::optional<CycleViolation> cycle_witness;
  std::optional<Rational> common_weight;
  std::optional<MatchingPair> matching_witness;
  std::optional<EdgeExtremeViolation> edge_witness;
};

// Runs all five checkers and enforces the internal consistency guarantees:
// the two node-potential routes agree, sampled even walks never contradict a
// positive even-walk verdict, the cycle check agrees with its basis form,
// and on matching-covered graphs the verdict vector is monotone.
PropertyReport property_report(const WeightedGraph& g,
                               const EnumerationBudget& budget = matching_budget());

} // namespace mcg
