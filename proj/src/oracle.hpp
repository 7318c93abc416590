#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace mcg {

// Exhaustive desk-scale enumerators. Every routine is deterministic: outputs
// are canonically ordered (sets sorted by edge/node id, lists sorted
// lexicographically over those id sequences). Exceeding a budget raises
// budget_error; nothing is ever truncated silently.

struct EnumerationBudget {
  int max_nodes = 16;
  long max_items = 5'000'000;
  unsigned long long seed = 0;
};

inline EnumerationBudget matching_budget() { return {16, 5'000'000, 0}; }
inline EnumerationBudget tight_cut_budget() { return {14, 5'000'000, 0}; }
inline EnumerationBudget arborescence_budget() { return {10, 5'000'000, 0}; }

// Edge sets are vectors of edge indices sorted by edge id.
using EdgeIndexSet = std::vector<int>;

std::vector<EdgeIndexSet> enumerate_perfect_matchings(const WeightedGraph& g,
                                                      const EnumerationBudget& budget = matching_budget());

// An even cycle together with nu = chi(M1) - chi(M2), the difference of its
// two perfect matchings, sign-fixed so the lowest-id edge gets +1.
struct AlternatingCycle {
  std::vector<int> edge_sequence;            // edges in cycle order
  std::vector<std::pair<int, int>> nu;       // (edge index, +-1) sorted by edge id
};

std::vector<AlternatingCycle> enumerate_even_cycles(const WeightedGraph& g,
                                                    const EnumerationBudget& budget = matching_budget());

std::vector<EdgeIndexSet> enumerate_b_factors(const WeightedGraph& g,
                                              const std::map<std::string, long>& b,
                                              const EnumerationBudget& budget = matching_budget());

std::vector<EdgeIndexSet> enumerate_arborescences(const WeightedDigraph& d,
                                                  const EnumerationBudget& budget = arborescence_budget());

// Nontrivial odd cuts crossed exactly once by every perfect matching. Each
// cut is reported once, as the lexicographically smaller shore (sorted node
// indices); the list is sorted by shore id sequence.
std::vector<std::vector<int>> enumerate_tight_cuts(const WeightedGraph& g,
                                                   const EnumerationBudget& budget = tight_cut_budget());

struct ClosedWalk {
  int start_node;
  std::vector<int> edge_sequence;
};

// Seed-deterministic random even closed walks; may return fewer than count.
std::vector<ClosedWalk> sample_even_closed_walks(const WeightedGraph& g, int count, int max_len,
                                                 unsigned long long seed);

// Definition-level validators, used to re-check enumerator output.
bool is_perfect_matching(const WeightedGraph& g, const EdgeIndexSet& edges);
bool is_b_factor(const WeightedGraph& g, const std::map<std::string, long>& b,
                 const EdgeIndexSet& edges);
bool is_arborescence(const WeightedDigraph& d, const EdgeIndexSet& edges);
bool is_closed_walk(const WeightedGraph& g, const std::vector<int>& edge_sequence);
bool is_simple_cycle(const WeightedGraph& g, const std::vector<int>& edge_sequence);

Rational edge_set_weight(const WeightedGraph& g, const EdgeIndexSet& edges);
Rational edge_set_cost(const WeightedDigraph& d, const EdgeIndexSet& edges);

// Connected and every edge lies in some perfect matching.
bool is_matching_covered(const WeightedGraph& g, const EnumerationBudget& budget = matching_budget());

EdgeIndexSet canonical_edge_set(const WeightedGraph& g, std::vector<int> edges);
bool edge_set_less(const WeightedGraph& g, const EdgeIndexSet& a, const EdgeIndexSet& b);

} // namespace mcg
