#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace mcg {

// Node and edge ids are opaque strings; document order is preserved and all
// canonical orderings sort by id strings. Loops are rejected everywhere,
// parallel edges are allowed.

struct GraphEdge {
  std::string id;
  std::string u;
  std::string v;
  Rational weight;
  bool operator==(const GraphEdge&) const = default;
};

struct DigraphEdge {
  std::string id;
  std::string tail;
  std::string head;
  Rational cost;
  bool operator==(const DigraphEdge&) const = default;
};

class WeightedGraph {
public:
  WeightedGraph(std::vector<std::string> nodes, std::vector<GraphEdge> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int index) const { return edges_[index]; }
  const std::string& node(int index) const { return nodes_[index]; }

  int node_index(const std::string& id) const; // input_error when unknown
  int edge_index(const std::string& id) const;
  bool has_node(const std::string& id) const;

  // Incident edge indices in document order.
  const std::vector<int>& incident_edges(int node_index) const { return incidence_[node_index]; }
  int edge_u(int edge_index) const { return edge_u_[edge_index]; }
  int edge_v(int edge_index) const { return edge_v_[edge_index]; }
  int other_end(int edge_index, int node_index) const;

  WeightedGraph with_weights(const std::map<std::string, Rational>& weights) const;

  bool operator==(const WeightedGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

private:
  std::vector<std::string> nodes_;
  std::vector<GraphEdge> edges_;
  std::map<std::string, int> node_ix_;
  std::map<std::string, int> edge_ix_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> edge_u_, edge_v_;
};

class WeightedDigraph {
public:
  WeightedDigraph(std::vector<std::string> nodes, std::vector<DigraphEdge> edges,
                  std::string root);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<DigraphEdge>& edges() const { return edges_; }
  const DigraphEdge& edge(int index) const { return edges_[index]; }
  const std::string& node(int index) const { return nodes_[index]; }
  const std::string& root() const { return root_; }
  int root_index() const { return root_ix_; }

  int node_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  const std::vector<int>& in_edges(int node_index) const { return in_[node_index]; }
  const std::vector<int>& out_edges(int node_index) const { return out_[node_index]; }
  int edge_tail(int edge_index) const { return tail_[edge_index]; }
  int edge_head(int edge_index) const { return head_[edge_index]; }

  bool operator==(const WeightedDigraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_ && root_ == other.root_;
  }

private:
  std::vector<std::string> nodes_;
  std::vector<DigraphEdge> edges_;
  std::string root_;
  int root_ix_;
  std::map<std::string, int> node_ix_;
  std::map<std::string, int> edge_ix_;
  std::vector<std::vector<int>> in_, out_;
  std::vector<int> tail_, head_;
};

// One parsed instance document: an undirected weighted graph or a rooted
// digraph with nonnegative costs, plus an optional degree-demand map b.
struct Instance {
  std::variant<WeightedGraph, WeightedDigraph> value;
  std::optional<std::map<std::string, long>> b;

  bool is_graph() const { return std::holds_alternative<WeightedGraph>(value); }
  const WeightedGraph& graph() const { return std::get<WeightedGraph>(value); }
  const WeightedDigraph& digraph() const { return std::get<WeightedDigraph>(value); }

  bool operator==(const Instance&) const = default;
};

Instance parse_instance(const std::string& json_text);
std::string serialize_instance(const Instance& instance); // canonical bytes

// Two-coloring per connected component, or a witness that none exists: a
// closed walk of odd edge length (edge indices, consecutive edges adjacent).
struct Bipartition {
  std::vector<int> side; // 0/1 per node index
};
struct OddClosedWalk {
  std::vector<int> edge_sequence;
};
using BipartitionResult = std::variant<Bipartition, OddClosedWalk>;
BipartitionResult bipartition_or_odd_cycle(const WeightedGraph& g);

// Contract a node subset to a single node. Edges inside the shore vanish;
// all other edges keep their ids and weights. The contracted node takes the
// lexicographically smallest id in the shore.
struct Contraction {
  WeightedGraph graph;
  std::string merged_node;
  std::map<std::string, std::string> edge_map; // surviving id -> original id
};
Contraction contract_shore(const WeightedGraph& g, const std::vector<std::string>& shore);

// Small shared helpers used all over: canonical (id-sorted) edge orderings.
bool edge_id_less(const WeightedGraph& g, int a, int b);
std::vector<int> sort_edges_by_id(const WeightedGraph& g, std::vector<int> edges);
std::vector<std::string> edge_ids(const WeightedGraph& g, const std::vector<int>& edges);
std::vector<std::string> node_ids(const WeightedGraph& g, const std::vector<int>& nodes);

std::vector<std::vector<int>> connected_components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

} // namespace mcg
