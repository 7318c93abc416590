#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace mcg {

// Named instances used by the CLI `construct` command and throughout the
// test suite. Node names and edge ids are fixed so goldens stay stable.
struct CatalogEntry {
  std::string name;
  Instance instance;
  std::string notes;
};

const std::vector<std::string>& catalog_names();
CatalogEntry catalog(const std::string& name); // input_error on unknown names

// Weight maps that separate the property classes. Each generator re-checks
// the advertised behaviour with the property checkers before returning and
// raises alarm_error if the check fails; nullopt means the graph cannot
// support such weights.

// Even-cycle symmetry holds, node-induced fails. Needs two non-bipartite
// blocks joined through bipartite blocks only; weights are 1 on the first
// such block, 2 on the second, 0 elsewhere.
std::optional<std::map<std::string, Rational>> ecs_not_nind_weights(const WeightedGraph& g);

// All perfect matchings share one weight, node-induced fails. Needs a tight
// cut both of whose contractions are non-bipartite; the weights are the
// indicator of that cut.
std::optional<std::map<std::string, Rational>> meq_not_nind_weights(const WeightedGraph& g);

// Fixed 10-node instance where every edge lies in a minimum and a maximum
// weight perfect matching yet the matching weights are not all equal.
struct EmxCounterexample {
  WeightedGraph graph; // weights carry the cut indicator already
  std::map<std::string, Rational> weights;
};
EmxCounterexample emx_counterexample();

} // namespace mcg
