#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace mcg {

using nlohmann::json;

WeightedGraph::WeightedGraph(std::vector<std::string> nodes, std::vector<GraphEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (nodes_[i].empty()) throw input_error("empty node id");
    if (!node_ix_.emplace(nodes_[i], i).second)
      throw input_error("duplicate node id '" + nodes_[i] + "'");
  }
  incidence_.resize(nodes_.size());
  edge_u_.reserve(edges_.size());
  edge_v_.reserve(edges_.size());
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const GraphEdge& e = edges_[i];
    if (e.id.empty()) throw input_error("empty edge id");
    if (!edge_ix_.emplace(e.id, i).second)
      throw input_error("duplicate edge id '" + e.id + "'");
    auto iu = node_ix_.find(e.u);
    auto iv = node_ix_.find(e.v);
    if (iu == node_ix_.end()) throw input_error("edge '" + e.id + "' references unknown node '" + e.u + "'");
    if (iv == node_ix_.end()) throw input_error("edge '" + e.id + "' references unknown node '" + e.v + "'");
    if (iu->second == iv->second) throw input_error("edge '" + e.id + "' is a loop");
    edge_u_.push_back(iu->second);
    edge_v_.push_back(iv->second);
    incidence_[iu->second].push_back(i);
    incidence_[iv->second].push_back(i);
  }
}

int WeightedGraph::node_index(const std::string& id) const {
  auto it = node_ix_.find(id);
  if (it == node_ix_.end()) throw input_error("unknown node '" + id + "'");
  return it->second;
}

int WeightedGraph::edge_index(const std::string& id) const {
  auto it = edge_ix_.find(id);
  if (it == edge_ix_.end()) throw input_error("unknown edge '" + id + "'");
  return it->second;
}

bool WeightedGraph::has_node(const std::string& id) const { return node_ix_.count(id) > 0; }

int WeightedGraph::other_end(int edge_index, int node_index) const {
  if (edge_u_[edge_index] == node_index) return edge_v_[edge_index];
  if (edge_v_[edge_index] == node_index) return edge_u_[edge_index];
  throw input_error("edge '" + edges_[edge_index].id + "' is not incident to node '" +
                    nodes_[node_index] + "'");
}

WeightedGraph WeightedGraph::with_weights(const std::map<std::string, Rational>& weights) const {
  std::vector<GraphEdge> edges = edges_;
  for (auto& e : edges) {
    auto it = weights.find(e.id);
    if (it != weights.end()) e.weight = it->second;
  }
  return WeightedGraph(nodes_, std::move(edges));
}

WeightedDigraph::WeightedDigraph(std::vector<std::string> nodes, std::vector<DigraphEdge> edges,
                                 std::string root)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), root_(std::move(root)) {
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (nodes_[i].empty()) throw input_error("empty node id");
    if (!node_ix_.emplace(nodes_[i], i).second)
      throw input_error("duplicate node id '" + nodes_[i] + "'");
  }
  auto ir = node_ix_.find(root_);
  if (ir == node_ix_.end()) throw input_error("root '" + root_ + "' is not a node");
  root_ix_ = ir->second;
  in_.resize(nodes_.size());
  out_.resize(nodes_.size());
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const DigraphEdge& e = edges_[i];
    if (e.id.empty()) throw input_error("empty edge id");
    if (!edge_ix_.emplace(e.id, i).second)
      throw input_error("duplicate edge id '" + e.id + "'");
    auto it = node_ix_.find(e.tail);
    auto ih = node_ix_.find(e.head);
    if (it == node_ix_.end()) throw input_error("edge '" + e.id + "' references unknown node '" + e.tail + "'");
    if (ih == node_ix_.end()) throw input_error("edge '" + e.id + "' references unknown node '" + e.head + "'");
    if (it->second == ih->second) throw input_error("edge '" + e.id + "' is a loop");
    if (e.cost < 0) throw input_error("edge '" + e.id + "' has negative cost");
    tail_.push_back(it->second);
    head_.push_back(ih->second);
    out_[it->second].push_back(i);
    in_[ih->second].push_back(i);
  }
}

int WeightedDigraph::node_index(const std::string& id) const {
  auto it = node_ix_.find(id);
  if (it == node_ix_.end()) throw input_error("unknown node '" + id + "'");
  return it->second;
}

int WeightedDigraph::edge_index(const std::string& id) const {
  auto it = edge_ix_.find(id);
  if (it == edge_ix_.end()) throw input_error("unknown edge '" + id + "'");
  return it->second;
}

namespace {

Rational weight_from_json(const json& w, const std::string& edge_id) {
  if (w.is_string()) return parse_rational(w.get<std::string>());
  if (w.is_number_integer()) return Rational(static_cast<long>(w.get<long long>()));
  throw input_error("edge '" + edge_id + "': weight must be a rational string or an integer");
}

void check_edge_fields(const json& e) {
  for (auto it = e.begin(); it != e.end(); ++it)
    if (it.key() != "id" && it.key() != "u" && it.key() != "v" && it.key() != "w")
      throw input_error("edge object has unknown field '" + it.key() + "'");
  for (const char* key : {"id", "u", "v"})
    if (!e[key].is_string()) throw input_error(std::string("edge field '") + key + "' must be a string");
}

} // namespace

Instance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("instance document must be a JSON object");

  static const std::set<std::string> known = {"type", "nodes", "edges", "root", "b"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) throw input_error("unknown field '" + it.key() + "'");

  if (!doc.contains("type") || !doc["type"].is_string())
    throw input_error("missing or non-string 'type'");
  std::string type = doc["type"].get<std::string>();
  if (type != "graph" && type != "digraph")
    throw input_error("'type' must be \"graph\" or \"digraph\"");

  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw input_error("missing or non-array 'nodes'");
  std::vector<std::string> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) throw input_error("node ids must be strings");
    nodes.push_back(n.get<std::string>());
  }

  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw input_error("missing or non-array 'edges'");

  Instance out{std::variant<WeightedGraph, WeightedDigraph>{std::in_place_type<WeightedGraph>,
                                                            std::vector<std::string>{},
                                                            std::vector<GraphEdge>{}},
               std::nullopt};

  if (type == "graph") {
    if (doc.contains("root")) throw input_error("'root' is only valid for digraphs");
    std::vector<GraphEdge> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("id") || !e.contains("u") || !e.contains("v") ||
          !e.contains("w"))
        throw input_error("each graph edge needs fields id, u, v, w");
      check_edge_fields(e);
      GraphEdge ge;
      ge.id = e["id"].get<std::string>();
      ge.u = e["u"].get<std::string>();
      ge.v = e["v"].get<std::string>();
      ge.weight = weight_from_json(e["w"], ge.id);
      edges.push_back(std::move(ge));
    }
    out.value.emplace<WeightedGraph>(std::move(nodes), std::move(edges));
  } else {
    if (!doc.contains("root") || !doc["root"].is_string())
      throw input_error("digraph documents need a string 'root'");
    if (doc.contains("b")) throw input_error("'b' is only valid for graphs");
    std::vector<DigraphEdge> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("id") || !e.contains("u") || !e.contains("v") ||
          !e.contains("w"))
        throw input_error("each digraph edge needs fields id, u (tail), v (head), w");
      check_edge_fields(e);
      DigraphEdge de;
      de.id = e["id"].get<std::string>();
      de.tail = e["u"].get<std::string>();
      de.head = e["v"].get<std::string>();
      de.cost = weight_from_json(e["w"], de.id);
      edges.push_back(std::move(de));
    }
    out.value.emplace<WeightedDigraph>(std::move(nodes), std::move(edges),
                                       doc["root"].get<std::string>());
  }

  if (doc.contains("b")) {
    if (!doc["b"].is_object()) throw input_error("'b' must be an object node -> nonnegative integer");
    std::map<std::string, long> b;
    const WeightedGraph& g = out.graph();
    for (auto it = doc["b"].begin(); it != doc["b"].end(); ++it) {
      if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
        throw input_error("b['" + it.key() + "'] must be a nonnegative integer");
      if (!g.has_node(it.key())) throw input_error("b references unknown node '" + it.key() + "'");
      b[it.key()] = static_cast<long>(it.value().get<long long>());
    }
    out.b = std::move(b);
  }
  return out;
}

std::string serialize_instance(const Instance& instance) {
  json doc;
  json edges = json::array();
  if (instance.is_graph()) {
    const WeightedGraph& g = instance.graph();
    doc["type"] = "graph";
    doc["nodes"] = g.nodes();
    for (const GraphEdge& e : g.edges())
      edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"w", rational_to_string(e.weight)}});
  } else {
    const WeightedDigraph& d = instance.digraph();
    doc["type"] = "digraph";
    doc["nodes"] = d.nodes();
    doc["root"] = d.root();
    for (const DigraphEdge& e : d.edges())
      edges.push_back({{"id", e.id}, {"u", e.tail}, {"v", e.head}, {"w", rational_to_string(e.cost)}});
  }
  doc["edges"] = std::move(edges);
  if (instance.b) {
    json b = json::object();
    for (const auto& [node, demand] : *instance.b) b[node] = demand;
    doc["b"] = std::move(b);
  }
  return doc.dump(2) + "\n";
}

BipartitionResult bipartition_or_odd_cycle(const WeightedGraph& g) {
  const int n = g.node_count();
  std::vector<int> side(n, -1), parent_edge(n, -1), parent(n, -1), depth(n, 0);
  for (int start = 0; start < n; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int ei : g.incident_edges(u)) {
        int v = g.other_end(ei, u);
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          parent[v] = u;
          parent_edge[v] = ei;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (side[v] == side[u] && ei != parent_edge[u]) {
          // Same-color edge: tree paths to the meeting ancestor plus this
          // edge form a closed walk of odd length.
          std::vector<int> up_u, up_v;
          int a = u, b = v;
          while (depth[a] > depth[b]) { up_u.push_back(parent_edge[a]); a = parent[a]; }
          while (depth[b] > depth[a]) { up_v.push_back(parent_edge[b]); b = parent[b]; }
          while (a != b) {
            up_u.push_back(parent_edge[a]); a = parent[a];
            up_v.push_back(parent_edge[b]); b = parent[b];
          }
          // walk runs ancestor -> u -> v -> ancestor
          std::vector<int> walk;
          for (auto it = up_u.rbegin(); it != up_u.rend(); ++it) walk.push_back(*it);
          walk.push_back(ei);
          for (int e : up_v) walk.push_back(e);
          return OddClosedWalk{std::move(walk)};
        }
      }
    }
  }
  return Bipartition{std::move(side)};
}

Contraction contract_shore(const WeightedGraph& g, const std::vector<std::string>& shore) {
  if (shore.empty()) throw input_error("cannot contract an empty shore");
  std::set<int> in_shore;
  for (const std::string& id : shore) in_shore.insert(g.node_index(id));
  if (static_cast<int>(in_shore.size()) == g.node_count())
    throw input_error("cannot contract the whole node set");

  std::string merged = *std::min_element(shore.begin(), shore.end());
  std::vector<std::string> nodes{merged};
  for (int i = 0; i < g.node_count(); ++i)
    if (!in_shore.count(i)) nodes.push_back(g.node(i));

  std::vector<GraphEdge> edges;
  std::map<std::string, std::string> edge_map;
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    bool u_in = in_shore.count(g.edge_u(ei)) > 0;
    bool v_in = in_shore.count(g.edge_v(ei)) > 0;
    if (u_in && v_in) continue;
    GraphEdge e = g.edge(ei);
    if (u_in) e.u = merged;
    if (v_in) e.v = merged;
    edge_map.emplace(e.id, e.id);
    edges.push_back(std::move(e));
  }
  return Contraction{WeightedGraph(std::move(nodes), std::move(edges)), merged,
                     std::move(edge_map)};
}

bool edge_id_less(const WeightedGraph& g, int a, int b) {
  return g.edge(a).id < g.edge(b).id;
}

std::vector<int> sort_edges_by_id(const WeightedGraph& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end(), [&](int a, int b) { return edge_id_less(g, a, b); });
  return edges;
}

std::vector<std::string> edge_ids(const WeightedGraph& g, const std::vector<int>& edges) {
  std::vector<std::string> out;
  out.reserve(edges.size());
  for (int e : edges) out.push_back(g.edge(e).id);
  return out;
}

std::vector<std::string> node_ids(const WeightedGraph& g, const std::vector<int>& nodes) {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (int v : nodes) out.push_back(g.node(v));
  return out;
}

std::vector<std::vector<int>> connected_components(const WeightedGraph& g) {
  std::vector<std::vector<int>> components;
  std::vector<char> seen(g.node_count(), 0);
  for (int start = 0; start < g.node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int ei : g.incident_edges(u)) {
        int v = g.other_end(ei, u);
        if (!seen[v]) { seen[v] = 1; queue.push_back(v); }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const WeightedGraph& g) {
  return g.node_count() == 0 || connected_components(g).size() == 1;
}

} // namespace mcg
