#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"

namespace mcg {

// Distinct solution weights in increasing order: x_1 < x_2 < ... < x_q.
struct WeightSpectrum {
  std::vector<Rational> values;
  int q() const { return static_cast<int>(values.size()); }
};

struct ConstrainedMatching {
  EdgeIndexSet matching; // canonical (id-sorted)
  Rational weight;
};

// Minimum-weight perfect matching M with forced ⊆ M and M ∩ forbidden = ∅,
// by branch and bound over the enumeration order. nullopt when infeasible;
// ties broken toward the id-lexicographically smallest matching.
std::optional<ConstrainedMatching> min_weight_pm_constrained(
    const WeightedGraph& g, const EdgeIndexSet& forced, const EdgeIndexSet& forbidden,
    const EnumerationBudget& budget = matching_budget());

WeightSpectrum pm_weight_spectrum(const WeightedGraph& g,
                                  const EnumerationBudget& budget = matching_budget());

// A forced set F and forbidden set D pinning the constrained minimum to the
// level-th smallest weight. |F| + |D| stays within bound: level-1 on
// bipartite graphs, 2(level-1) otherwise; exceeding it is an internal alarm.
struct ForcingCertificate {
  EdgeIndexSet forced;
  EdgeIndexSet forbidden; // empty for plain matchings
  int level = 1;
  Rational achieved;
  int bound = 0;
};

// Searches forced sets only (forbidden stays empty), smallest first, in
// id-lexicographic order within each size.
ForcingCertificate lth_smallest_pm_forcing_set(const WeightedGraph& g, int level,
                                               const EnumerationBudget& budget = matching_budget());

// Degree-demand reduction: each node becomes b(v) copies, each edge becomes
// a two-port gadget whose inner edge weighs 0 and whose outer edges weigh
// w(e)/2. Demand selections of the source correspond to perfect matchings of
// the derived graph with equal weight.
struct EdgeGadget {
  std::string inner;
  std::vector<std::string> outer_u;
  std::vector<std::string> outer_v;
};

struct GadgetMap {
  WeightedGraph source;
  std::map<std::string, long> demand;
  WeightedGraph derived;
  std::map<std::string, EdgeGadget> per_edge;                 // source edge id -> parts
  std::map<std::string, std::vector<std::string>> copies;     // source node id -> copy ids
  std::map<std::string, std::pair<std::string, bool>> origin; // derived edge -> (source edge, inner?)
  bool bipartite = false;
};

GadgetMap bfactor_gadget(const WeightedGraph& g, const std::map<std::string, long>& b);

// pm is a perfect matching of gm.derived; result is a demand selection of
// gm.source (edge indices, canonical). Inverse routes node copies in
// ascending copy order along edges in document order. Both directions
// preserve weight exactly.
EdgeIndexSet bfactor_from_pm(const GadgetMap& gm, const EdgeIndexSet& pm);
EdgeIndexSet pm_from_bfactor(const GadgetMap& gm, const EdgeIndexSet& selection);

WeightSpectrum bfactor_weight_spectrum(const WeightedGraph& g,
                                       const std::map<std::string, long>& b,
                                       const EnumerationBudget& budget = matching_budget());

struct BFactorCertificate {
  EdgeIndexSet forced;    // F, source edges
  EdgeIndexSet forbidden; // D, source edges
  int level = 1;
  Rational achieved;
  int bound = 0;
  ForcingCertificate gadget_certificate;
};

// Runs the matching search on the derived graph and maps the forced set A
// back: an inner edge of e in A forbids e, an outer edge of e forces e.
BFactorCertificate lth_smallest_bfactor(const WeightedGraph& g,
                                        const std::map<std::string, long>& b, int level,
                                        const EnumerationBudget& budget = matching_budget());

} // namespace mcg
