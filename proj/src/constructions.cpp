#include "constructions.hpp"

#include <utility>

#include "decomposition.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "symmetry.hpp"

namespace mcg {

namespace {

GraphEdge ge(std::string id, std::string u, std::string v, long w = 1) {
  return GraphEdge{std::move(id), std::move(u), std::move(v), make_rational(w)};
}

DigraphEdge de(std::string id, std::string t, std::string h, long c) {
  return DigraphEdge{std::move(id), std::move(t), std::move(h), make_rational(c)};
}

// Appends all |A| x |B| join edges, A-major, numbering from *next.
void join_all(std::vector<GraphEdge>& edges, int* next, const std::vector<std::string>& a,
              const std::vector<std::string>& b, long w) {
  for (const std::string& u : a)
    for (const std::string& v : b) edges.push_back(ge("e" + std::to_string((*next)++), u, v, w));
}

WeightedGraph build_k2() { return WeightedGraph({"a", "b"}, {ge("e1", "a", "b")}); }

WeightedGraph build_k3() {
  return WeightedGraph({"a", "b", "c"},
                       {ge("e1", "a", "b"), ge("e2", "b", "c"), ge("e3", "c", "a")});
}

WeightedGraph build_c4() {
  return WeightedGraph({"a", "b", "c", "d"}, {ge("e1", "a", "b"), ge("e2", "b", "c"),
                                              ge("e3", "c", "d"), ge("e4", "d", "a")});
}

WeightedGraph build_k4() {
  return WeightedGraph({"a", "b", "c", "d"},
                       {ge("e1", "a", "b"), ge("e2", "a", "c"), ge("e3", "a", "d"),
                        ge("e4", "b", "c"), ge("e5", "b", "d"), ge("e6", "c", "d")});
}

WeightedGraph build_k33() {
  std::vector<GraphEdge> edges;
  int next = 1;
  join_all(edges, &next, {"u1", "u2", "u3"}, {"v1", "v2", "v3"}, 1);
  return WeightedGraph({"u1", "u2", "u3", "v1", "v2", "v3"}, std::move(edges));
}

WeightedGraph build_prism() {
  return WeightedGraph({"a1", "b1", "c1", "a2", "b2", "c2"},
                       {ge("e1", "a1", "b1"), ge("e2", "b1", "c1"), ge("e3", "c1", "a1"),
                        ge("e4", "a2", "b2"), ge("e5", "b2", "c2"), ge("e6", "c2", "a2"),
                        ge("e7", "a1", "a2"), ge("e8", "b1", "b2"), ge("e9", "c1", "c2")});
}

WeightedGraph build_bowtie() {
  return WeightedGraph({"a", "b", "c", "d", "e"},
                       {ge("e1", "a", "b"), ge("e2", "b", "c"), ge("e3", "c", "a"),
                        ge("e4", "c", "d"), ge("e5", "d", "e"), ge("e6", "e", "c")});
}

WeightedGraph build_grem() {
  std::vector<GraphEdge> edges = {ge("e1", "a1", "a2"), ge("e2", "a1", "a3"),
                                  ge("e3", "a2", "a3"), ge("e4", "b1", "b2"),
                                  ge("e5", "b1", "b3"), ge("e6", "b2", "b3")};
  int next = 7;
  join_all(edges, &next, {"x"}, {"a1", "a2", "a3", "b1", "b2", "b3"}, 1);
  join_all(edges, &next, {"y"}, {"a1", "a2", "a3", "b1", "b2", "b3"}, 1);
  return WeightedGraph({"a1", "a2", "a3", "b1", "b2", "b3", "x", "y"}, std::move(edges));
}

// Four layers around a cycle: two triangles t1..t3 and u1..u3, two
// independent pairs s1,s2 and v1,v2, consecutive layers fully joined.
// Weight 1 marks the edges leaving the t/s half, 0 everything else.
WeightedGraph build_gstar() {
  std::vector<GraphEdge> edges = {ge("e1", "t1", "t2", 0), ge("e2", "t1", "t3", 0),
                                  ge("e3", "t2", "t3", 0), ge("e4", "u1", "u2", 0),
                                  ge("e5", "u1", "u3", 0), ge("e6", "u2", "u3", 0)};
  int next = 7;
  join_all(edges, &next, {"t1", "t2", "t3"}, {"s1", "s2"}, 0);
  join_all(edges, &next, {"s1", "s2"}, {"u1", "u2", "u3"}, 1);
  join_all(edges, &next, {"u1", "u2", "u3"}, {"v1", "v2"}, 0);
  join_all(edges, &next, {"v1", "v2"}, {"t1", "t2", "t3"}, 1);
  return WeightedGraph({"t1", "t2", "t3", "s1", "s2", "u1", "u2", "u3", "v1", "v2"},
                       std::move(edges));
}

WeightedDigraph build_d1() {
  return WeightedDigraph({"r", "a", "b"},
                         {de("e1", "r", "a", 0), de("e2", "r", "b", 0), de("e3", "a", "b", 1),
                          de("e4", "b", "a", 2)},
                         "r");
}

WeightedDigraph build_d2() {
  return WeightedDigraph({"r", "a", "b"},
                         {de("e1", "r", "a", 2), de("e2", "r", "b", 3), de("e3", "a", "b", 1),
                          de("e4", "b", "a", 1)},
                         "r");
}

// Path between two blocks in the block tree; returns the intermediate block
// indices (endpoints excluded). Tree vertices are blocks and cut nodes.
std::vector<int> blocks_between(const BlockDecomposition& bd, int from, int to) {
  std::map<std::string, std::vector<int>> cut_to_blocks;
  std::map<int, std::vector<std::string>> block_to_cuts;
  for (const auto& [block, cut] : bd.tree_edges) {
    cut_to_blocks[cut].push_back(block);
    block_to_cuts[block].push_back(cut);
  }
  // BFS over "b<i>" and "c<id>" vertices
  std::map<std::string, std::string> parent;
  std::vector<std::string> queue = {"b" + std::to_string(from)};
  parent[queue[0]] = "";
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::string cur = queue[head];
    std::vector<std::string> nexts;
    if (cur[0] == 'b') {
      for (const std::string& cut : block_to_cuts[std::stoi(cur.substr(1))])
        nexts.push_back("c" + cut);
    } else {
      for (int blk : cut_to_blocks[cur.substr(1)]) nexts.push_back("b" + std::to_string(blk));
    }
    for (const std::string& nx : nexts)
      if (!parent.count(nx)) {
        parent[nx] = cur;
        queue.push_back(nx);
      }
  }
  std::string goal = "b" + std::to_string(to);
  if (!parent.count(goal)) throw alarm_error("block tree is not connected");
  std::vector<int> between;
  for (std::string cur = parent[goal]; !cur.empty(); cur = parent[cur])
    if (cur[0] == 'b') between.push_back(std::stoi(cur.substr(1)));
  if (!between.empty() && between.back() == from) between.pop_back();
  return between;
}

} // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"K2",     "K3",   "C4",    "K4",
                                                 "K33",    "PRISM", "BOWTIE", "GREM",
                                                 "GSTAR",  "D1",   "D2",    "TRI2"};
  return names;
}

CatalogEntry catalog(const std::string& name) {
  if (name == "K2") return {name, Instance{build_k2(), std::nullopt}, "single edge"};
  if (name == "K3") return {name, Instance{build_k3(), std::nullopt}, "triangle"};
  if (name == "C4") return {name, Instance{build_c4(), std::nullopt}, "four-cycle"};
  if (name == "K4")
    return {name, Instance{build_k4(), std::nullopt}, "complete graph on four nodes"};
  if (name == "K33")
    return {name, Instance{build_k33(), std::nullopt}, "complete bipartite graph on 3+3 nodes"};
  if (name == "PRISM") return {name, Instance{build_prism(), std::nullopt}, "triangular prism"};
  if (name == "BOWTIE")
    return {name, Instance{build_bowtie(), std::nullopt}, "two triangles sharing one node"};
  if (name == "GREM")
    return {name, Instance{build_grem(), std::nullopt},
            "two triangles plus two hub nodes joined to all six triangle nodes"};
  if (name == "GSTAR") {
    EmxCounterexample ex = emx_counterexample();
    return {name, Instance{std::move(ex.graph), std::nullopt},
            "four fully-joined layers; the layer-cut indicator weighting gives matchings of "
            "exactly two weights"};
  }
  if (name == "D1")
    return {name, Instance{build_d1(), std::nullopt}, "three-node digraph, zero-cost root star"};
  if (name == "D2")
    return {name, Instance{build_d2(), std::nullopt},
            "three-node digraph with a two-node cycle below the root"};
  if (name == "TRI2") {
    std::map<std::string, long> b = {{"a", 2}, {"b", 2}, {"c", 2}};
    return {name, Instance{build_k3(), std::move(b)}, "triangle with demand two at every node"};
  }
  throw input_error("unknown catalog name: " + name);
}

std::optional<std::map<std::string, Rational>> ecs_not_nind_weights(const WeightedGraph& g) {
  BlockDecomposition bd = block_decomposition(g);
  std::vector<int> nb;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    if (!bd.blocks[i].bipartite) nb.push_back(static_cast<int>(i));
  if (nb.size() < 2) return std::nullopt;

  // first pair (in block order) whose tree path crosses no other
  // non-bipartite block
  int b1 = -1, b2 = -1;
  for (std::size_t i = 0; i < nb.size() && b1 < 0; ++i)
    for (std::size_t j = i + 1; j < nb.size() && b1 < 0; ++j) {
      bool clean = true;
      for (int mid : blocks_between(bd, nb[i], nb[j]))
        if (!bd.blocks[mid].bipartite) clean = false;
      if (clean) {
        b1 = nb[i];
        b2 = nb[j];
      }
    }
  if (b1 < 0) return std::nullopt; // cannot happen: a closest pair is clean

  std::map<std::string, Rational> w;
  for (const GraphEdge& e : g.edges()) w[e.id] = make_rational(0);
  for (int ei : bd.blocks[b1].edge_indices) w[g.edge(ei).id] = make_rational(1);
  for (int ei : bd.blocks[b2].edge_indices) w[g.edge(ei).id] = make_rational(2);

  WeightedGraph gw = g.with_weights(w);
  if (check_even_cycle_symmetry(gw).has_value())
    throw alarm_error("block-constant weights produced an unbalanced even cycle");
  if (!std::holds_alternative<PotentialObstruction>(check_node_induced(gw)))
    throw alarm_error("two-block weights unexpectedly admit a node potential");
  return w;
}

std::optional<std::map<std::string, Rational>> meq_not_nind_weights(const WeightedGraph& g) {
  if (!is_matching_covered(g))
    throw not_applicable_error("tight-cut weights need a matching-covered graph");

  std::vector<std::vector<int>> cuts = enumerate_tight_cuts(g);
  std::optional<std::vector<int>> chosen;
  for (const std::vector<int>& shore : cuts) {
    std::vector<char> in_shore(g.node_count(), 0);
    for (int v : shore) in_shore[v] = 1;
    std::vector<std::string> side_a = node_ids(g, shore), side_b;
    for (int v = 0; v < g.node_count(); ++v)
      if (!in_shore[v]) side_b.push_back(g.node(v));
    bool a_odd = std::holds_alternative<OddClosedWalk>(
        bipartition_or_odd_cycle(contract_shore(g, side_b).graph));
    bool b_odd = std::holds_alternative<OddClosedWalk>(
        bipartition_or_odd_cycle(contract_shore(g, side_a).graph));
    if (a_odd && b_odd) {
      chosen = shore;
      break;
    }
  }
  if (!chosen) return std::nullopt;

  std::vector<char> in_shore(g.node_count(), 0);
  for (int v : *chosen) in_shore[v] = 1;
  std::map<std::string, Rational> w;
  for (int ei = 0; ei < g.edge_count(); ++ei)
    w[g.edge(ei).id] =
        make_rational(in_shore[g.edge_u(ei)] != in_shore[g.edge_v(ei)] ? 1 : 0);

  WeightedGraph gw = g.with_weights(w);
  MatchingEqualityResult eq = check_pm_equality(gw);
  if (!std::holds_alternative<Rational>(eq) || std::get<Rational>(eq) != make_rational(1))
    throw alarm_error("cut indicator is not crossed exactly once by every matching");
  if (!std::holds_alternative<PotentialObstruction>(check_node_induced(gw)))
    throw alarm_error("cut indicator weights unexpectedly admit a node potential");
  return w;
}

EmxCounterexample emx_counterexample() {
  WeightedGraph g = build_gstar();
  if (!is_matching_covered(g)) throw alarm_error("layer construction is not matching-covered");
  if (!std::holds_alternative<MatchingPair>(check_pm_equality(g)))
    throw alarm_error("layer construction matchings collapsed to one weight");
  if (check_edge_minmax(g).has_value())
    throw alarm_error("layer construction has an edge missing an extreme matching");
  std::map<std::string, Rational> w;
  for (const GraphEdge& e : g.edges()) w[e.id] = e.weight;
  return {std::move(g), std::move(w)};
}

} // namespace mcg
