#include "decomposition.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace mcg {

namespace {

bool subgraph_bipartite(const WeightedGraph& g, const std::vector<int>& edges) {
  // 2-color just the given edge set
  std::map<int, int> color;
  std::map<int, std::vector<int>> adj;
  for (int ei : edges) {
    adj[g.edge_u(ei)].push_back(ei);
    adj[g.edge_v(ei)].push_back(ei);
  }
  for (const auto& [start, _] : adj) {
    if (color.count(start)) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int ei : adj[u]) {
        int v = g.edge_u(ei) == u ? g.edge_v(ei) : g.edge_u(ei);
        auto it = color.find(v);
        if (it == color.end()) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (it->second == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

} // namespace

BlockDecomposition block_decomposition(const WeightedGraph& g) {
  const int n = g.node_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> block_edges;
  int timer = 0;

  // Iterative lowpoint DFS over the multigraph; the parent edge (one
  // instance, parallels still count) is skipped via its edge index.
  struct Frame {
    int node;
    int parent_edge;
    std::size_t next;
    int children = 0;
  };

  std::vector<char> edge_visited(g.edge_count(), 0);
  for (int start = 0; start < n; ++start) {
    if (disc[start] != -1) continue;
    std::vector<Frame> stack;
    stack.push_back({start, -1, 0});
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int u = f.node;
      const std::vector<int>& inc = g.incident_edges(u);
      if (f.next < inc.size()) {
        int ei = inc[f.next++];
        if (ei == f.parent_edge || edge_visited[ei]) continue;
        int v = g.other_end(ei, u);
        edge_visited[ei] = 1;
        edge_stack.push_back(ei);
        if (disc[v] == -1) {
          disc[v] = low[v] = timer++;
          stack.push_back({v, ei, 0});
        } else {
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        const int tree_edge = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) break;
        Frame& pf = stack.back();
        int p = pf.node;
        ++pf.children;
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
          // pop the block rooted at the tree edge (p -> u)
          std::vector<int> block;
          while (!edge_stack.empty()) {
            int ei = edge_stack.back();
            block.push_back(ei);
            edge_stack.pop_back();
            if (ei == tree_edge) break;
          }
          block_edges.push_back(std::move(block));
        }
      }
    }
  }

  BlockDecomposition out;
  out.nonbipartite_count = 0;
  std::map<int, std::vector<int>> node_blocks; // node index -> block indices
  for (std::vector<int>& edges : block_edges) {
    Block b;
    std::set<int> nodes;
    for (int ei : edges) {
      nodes.insert(g.edge_u(ei));
      nodes.insert(g.edge_v(ei));
    }
    b.node_indices.assign(nodes.begin(), nodes.end());
    b.edge_indices = sort_edges_by_id(g, std::move(edges));
    b.bipartite = subgraph_bipartite(g, b.edge_indices);
    if (!b.bipartite) ++out.nonbipartite_count;
    int index = static_cast<int>(out.blocks.size());
    for (int v : b.node_indices) node_blocks[v].push_back(index);
    out.blocks.push_back(std::move(b));
  }

  std::set<std::string> cuts;
  for (const auto& [v, blocks] : node_blocks) {
    if (blocks.size() > 1) {
      cuts.insert(g.node(v));
      for (int bi : blocks) out.tree_edges.emplace_back(bi, g.node(v));
    }
  }
  out.cut_nodes.assign(cuts.begin(), cuts.end());
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

namespace {

std::unique_ptr<TightCutNode> decompose_rec(const WeightedGraph& g,
                                            const EnumerationBudget& budget,
                                            const CutChooser& chooser, TightCutTree& tree) {
  if (!is_matching_covered(g, budget))
    throw alarm_error("tight cut decomposition reached a graph that is not matching-covered");

  auto node = std::make_unique<TightCutNode>(TightCutNode{g, std::nullopt, nullptr, nullptr});
  auto cuts = enumerate_tight_cuts(g, budget);
  if (cuts.empty()) {
    bool bipartite = std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(g));
    node->leaf_brick = !bipartite;
    if (bipartite) ++tree.braces; else ++tree.bricks;
    tree.leaves.push_back({!bipartite, g.node_count(), g.edge_count()});
    return node;
  }

  std::size_t pick = chooser ? chooser(cuts.size()) % cuts.size() : 0;
  std::vector<std::string> shore = node_ids(g, cuts[pick]);
  std::vector<std::string> complement;
  std::set<std::string> in_shore(shore.begin(), shore.end());
  for (const std::string& id : g.nodes())
    if (!in_shore.count(id)) complement.push_back(id);

  node->shore = shore;
  node->contract_shore_child =
      decompose_rec(contract_shore(g, shore).graph, budget, chooser, tree);
  node->contract_complement_child =
      decompose_rec(contract_shore(g, complement).graph, budget, chooser, tree);
  return node;
}

} // namespace

TightCutTree tight_cut_decomposition(const WeightedGraph& g, const EnumerationBudget& budget,
                                     const CutChooser& chooser) {
  if (!is_matching_covered(g, budget))
    throw not_applicable_error("tight cut decomposition requires a matching-covered graph");
  TightCutTree tree;
  tree.root = decompose_rec(g, budget, chooser, tree);
  std::sort(tree.leaves.begin(), tree.leaves.end());
  return tree;
}

} // namespace mcg
