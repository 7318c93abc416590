#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"

namespace mcg {

// Maximal 2-connected pieces (an isolated cut edge forms its own block).
struct Block {
  std::vector<int> node_indices;  // sorted
  std::vector<int> edge_indices;  // sorted by edge id
  bool bipartite;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<std::string> cut_nodes;                    // sorted ids
  std::vector<std::pair<int, std::string>> tree_edges;   // (block index, cut node id)
  int nonbipartite_count;
};

BlockDecomposition block_decomposition(const WeightedGraph& g);

// Recursive tight-cut splitting. Internal nodes record the chosen shore and
// carry the two contractions; leaves are bricks (non-bipartite) or braces
// (bipartite). The chooser picks among the available cuts (default: first in
// canonical order) so order-invariance can be exercised.
struct TightCutNode {
  WeightedGraph graph;
  std::optional<std::vector<std::string>> shore; // set on internal nodes
  std::unique_ptr<TightCutNode> contract_shore_child;
  std::unique_ptr<TightCutNode> contract_complement_child;
  bool is_leaf() const { return !shore.has_value(); }
  bool leaf_brick = false;
};

struct LeafSignature {
  bool brick;
  int nodes;
  int edges;
  auto operator<=>(const LeafSignature&) const = default;
};

struct TightCutTree {
  std::unique_ptr<TightCutNode> root;
  int bricks = 0;
  int braces = 0;
  std::vector<LeafSignature> leaves; // sorted multiset
};

using CutChooser = std::function<std::size_t(std::size_t /*cut count*/)>;

TightCutTree tight_cut_decomposition(const WeightedGraph& g,
                                     const EnumerationBudget& budget = tight_cut_budget(),
                                     const CutChooser& chooser = {});

} // namespace mcg
