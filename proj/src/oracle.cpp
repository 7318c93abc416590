#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "errors.hpp"

namespace mcg {

namespace {

void check_node_budget(int n, const EnumerationBudget& budget, const char* what) {
  if (n > budget.max_nodes)
    throw budget_error(std::string(what) + ": node count " + std::to_string(n) +
                       " exceeds budget " + std::to_string(budget.max_nodes));
}

void check_item_budget(long items, const EnumerationBudget& budget, const char* what) {
  if (items > budget.max_items)
    throw budget_error(std::string(what) + ": enumeration exceeds item budget " +
                       std::to_string(budget.max_items));
}

} // namespace

EdgeIndexSet canonical_edge_set(const WeightedGraph& g, std::vector<int> edges) {
  return sort_edges_by_id(g, std::move(edges));
}

bool edge_set_less(const WeightedGraph& g, const EdgeIndexSet& a, const EdgeIndexSet& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](int x, int y) { return g.edge(x).id < g.edge(y).id; });
}

std::vector<EdgeIndexSet> enumerate_perfect_matchings(const WeightedGraph& g,
                                                      const EnumerationBudget& budget) {
  check_node_budget(g.node_count(), budget, "perfect matchings");
  std::vector<EdgeIndexSet> out;
  if (g.node_count() % 2 != 0) return out;

  std::vector<char> covered(g.node_count(), 0);
  std::vector<int> chosen;

  // Pair the lowest uncovered node with each incident edge in turn.
  auto rec = [&](auto&& self) -> void {
    int u = -1;
    for (int i = 0; i < g.node_count(); ++i)
      if (!covered[i]) { u = i; break; }
    if (u < 0) {
      check_item_budget(static_cast<long>(out.size()) + 1, budget, "perfect matchings");
      out.push_back(canonical_edge_set(g, chosen));
      return;
    }
    for (int ei : g.incident_edges(u)) {
      int v = g.other_end(ei, u);
      if (covered[v]) continue;
      covered[u] = covered[v] = 1;
      chosen.push_back(ei);
      self(self);
      chosen.pop_back();
      covered[u] = covered[v] = 0;
    }
  };
  rec(rec);

  std::sort(out.begin(), out.end(),
            [&](const EdgeIndexSet& a, const EdgeIndexSet& b) { return edge_set_less(g, a, b); });
  return out;
}

std::vector<AlternatingCycle> enumerate_even_cycles(const WeightedGraph& g,
                                                    const EnumerationBudget& budget) {
  check_node_budget(g.node_count(), budget, "even cycles");

  // Key: id-sorted edge set; value: first discovered traversal order.
  std::map<std::vector<int>, std::vector<int>> cycles;

  std::vector<char> on_path(g.node_count(), 0);
  std::vector<char> edge_used(g.edge_count(), 0);
  std::vector<int> path_edges;

  // Enumerate simple cycles once each by rooting the search at the cycle's
  // smallest node index and never visiting smaller nodes. Both traversal
  // directions reach the same edge set; the map collapses them.
  for (int s = 0; s < g.node_count(); ++s) {
    auto dfs = [&](auto&& self, int u) -> void {
      for (int ei : g.incident_edges(u)) {
        if (edge_used[ei]) continue;
        int v = g.other_end(ei, u);
        if (v < s) continue;
        if (v == s) {
          path_edges.push_back(ei);
          if (path_edges.size() % 2 == 0) {
            auto key = canonical_edge_set(g, path_edges);
            check_item_budget(static_cast<long>(cycles.size()) + 1, budget, "even cycles");
            cycles.emplace(std::move(key), path_edges);
          }
          path_edges.pop_back();
          continue;
        }
        if (on_path[v]) continue;
        on_path[v] = 1;
        edge_used[ei] = 1;
        path_edges.push_back(ei);
        self(self, v);
        path_edges.pop_back();
        edge_used[ei] = 0;
        on_path[v] = 0;
      }
    };
    // Two-cycles from parallel edges need the first step tracked as an edge.
    on_path[s] = 1;
    for (int first : g.incident_edges(s)) {
      int v = g.other_end(first, s);
      if (v < s) continue;
      on_path[v] = 1;
      edge_used[first] = 1;
      path_edges.push_back(first);
      dfs(dfs, v);
      path_edges.pop_back();
      edge_used[first] = 0;
      on_path[v] = 0;
    }
    on_path[s] = 0;
  }

  std::vector<AlternatingCycle> out;
  out.reserve(cycles.size());
  std::vector<std::pair<std::vector<std::string>, const std::vector<int>*>> keyed;
  for (const auto& [key, seq] : cycles) keyed.emplace_back(edge_ids(g, key), &seq);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [ids, seq_ptr] : keyed) {
    const std::vector<int>& seq = *seq_ptr;
    AlternatingCycle c;
    c.edge_sequence = seq;
    std::vector<std::pair<int, int>> nu;
    for (std::size_t i = 0; i < seq.size(); ++i) nu.emplace_back(seq[i], i % 2 == 0 ? 1 : -1);
    std::sort(nu.begin(), nu.end(),
              [&](const auto& a, const auto& b) { return g.edge(a.first).id < g.edge(b.first).id; });
    if (nu.front().second < 0)
      for (auto& [e, sgn] : nu) sgn = -sgn;
    c.nu = std::move(nu);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<EdgeIndexSet> enumerate_b_factors(const WeightedGraph& g,
                                              const std::map<std::string, long>& b,
                                              const EnumerationBudget& budget) {
  check_node_budget(g.node_count(), budget, "b-factors");
  std::vector<long> need(g.node_count(), 0);
  for (const auto& [id, demand] : b) need[g.node_index(id)] = demand;

  // Remaining incident edges per node, for pruning.
  std::vector<long> slack(g.node_count(), 0);
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    ++slack[g.edge_u(ei)];
    ++slack[g.edge_v(ei)];
  }

  std::vector<EdgeIndexSet> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int ei) -> void {
    if (ei == g.edge_count()) {
      for (int v = 0; v < g.node_count(); ++v)
        if (need[v] != 0) return;
      check_item_budget(static_cast<long>(out.size()) + 1, budget, "b-factors");
      out.push_back(canonical_edge_set(g, chosen));
      return;
    }
    int u = g.edge_u(ei), v = g.edge_v(ei);
    --slack[u]; --slack[v];
    // skip edge ei
    if (need[u] <= slack[u] && need[v] <= slack[v]) self(self, ei + 1);
    // take edge ei
    if (need[u] > 0 && need[v] > 0) {
      --need[u]; --need[v];
      chosen.push_back(ei);
      self(self, ei + 1);
      chosen.pop_back();
      ++need[u]; ++need[v];
    }
    ++slack[u]; ++slack[v];
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [&](const EdgeIndexSet& a, const EdgeIndexSet& b2) { return edge_set_less(g, a, b2); });
  return out;
}

std::vector<EdgeIndexSet> enumerate_arborescences(const WeightedDigraph& d,
                                                  const EnumerationBudget& budget) {
  check_node_budget(d.node_count(), budget, "arborescences");
  const int n = d.node_count();
  const int r = d.root_index();

  std::vector<int> order; // non-root nodes in document order
  for (int v = 0; v < n; ++v)
    if (v != r) order.push_back(v);

  std::vector<int> parent_edge(n, -1);
  std::vector<EdgeIndexSet> out;

  auto creates_cycle = [&](int tail, int head) {
    int cur = tail;
    while (cur != r && parent_edge[cur] != -1) {
      cur = d.edge_tail(parent_edge[cur]);
      if (cur == head) return true;
    }
    return false;
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      std::vector<int> edges;
      for (int v : order) edges.push_back(parent_edge[v]);
      check_item_budget(static_cast<long>(out.size()) + 1, budget, "arborescences");
      std::sort(edges.begin(), edges.end(),
                [&](int a, int b) { return d.edge(a).id < d.edge(b).id; });
      out.push_back(std::move(edges));
      return;
    }
    int v = order[k];
    for (int ei : d.in_edges(v)) {
      if (creates_cycle(d.edge_tail(ei), v)) continue;
      parent_edge[v] = ei;
      self(self, k + 1);
      parent_edge[v] = -1;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [&](const EdgeIndexSet& a, const EdgeIndexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](int x, int y) { return d.edge(x).id < d.edge(y).id; });
  });
  return out;
}

std::vector<std::vector<int>> enumerate_tight_cuts(const WeightedGraph& g,
                                                   const EnumerationBudget& budget) {
  check_node_budget(g.node_count(), budget, "tight cuts");
  const int n = g.node_count();
  auto matchings = enumerate_perfect_matchings(g, budget);
  if (matchings.empty()) throw not_applicable_error("tight cuts: graph has no perfect matching");

  std::vector<std::vector<int>> shores;
  for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size % 2 == 0 || size <= 1 || size >= n - 1) continue;

    std::vector<int> shore, other;
    for (int v = 0; v < n; ++v)
      ((mask >> v) & 1 ? shore : other).push_back(v);
    // Report each cut once: keep the lexicographically smaller shore.
    if (node_ids(g, other) < node_ids(g, shore)) continue;

    bool tight = true;
    for (const EdgeIndexSet& m : matchings) {
      int crossings = 0;
      for (int ei : m) {
        bool u_in = (mask >> g.edge_u(ei)) & 1;
        bool v_in = (mask >> g.edge_v(ei)) & 1;
        if (u_in != v_in && ++crossings > 1) break;
      }
      if (crossings != 1) { tight = false; break; }
    }
    if (tight) {
      check_item_budget(static_cast<long>(shores.size()) + 1, budget, "tight cuts");
      shores.push_back(std::move(shore));
    }
  }
  std::sort(shores.begin(), shores.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    return node_ids(g, a) < node_ids(g, b);
  });
  return shores;
}

std::vector<ClosedWalk> sample_even_closed_walks(const WeightedGraph& g, int count, int max_len,
                                                 unsigned long long seed) {
  std::vector<ClosedWalk> out;
  if (count <= 0 || g.edge_count() == 0 || max_len < 2) return out;
  std::mt19937_64 rng(seed);

  std::vector<int> starts;
  for (int v = 0; v < g.node_count(); ++v)
    if (!g.incident_edges(v).empty()) starts.push_back(v);
  if (starts.empty()) return out;

  long attempts = static_cast<long>(count) * 64;
  while (static_cast<int>(out.size()) < count && attempts-- > 0) {
    int start = starts[rng() % starts.size()];
    int cur = start;
    std::vector<int> walk;
    for (int step = 0; step < max_len; ++step) {
      const std::vector<int>& inc = g.incident_edges(cur);
      int ei = inc[rng() % inc.size()];
      cur = g.other_end(ei, cur);
      walk.push_back(ei);
      if (cur == start && walk.size() % 2 == 0) {
        out.push_back(ClosedWalk{start, walk});
        break;
      }
    }
  }
  return out;
}

bool is_perfect_matching(const WeightedGraph& g, const EdgeIndexSet& edges) {
  std::vector<int> deg(g.node_count(), 0);
  std::set<int> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size()) return false;
  for (int ei : edges) {
    if (ei < 0 || ei >= g.edge_count()) return false;
    ++deg[g.edge_u(ei)];
    ++deg[g.edge_v(ei)];
  }
  for (int v = 0; v < g.node_count(); ++v)
    if (deg[v] != 1) return false;
  return true;
}

bool is_b_factor(const WeightedGraph& g, const std::map<std::string, long>& b,
                 const EdgeIndexSet& edges) {
  std::vector<long> need(g.node_count(), 0);
  for (const auto& [id, demand] : b) need[g.node_index(id)] = demand;
  std::set<int> distinct(edges.begin(), edges.end());
  if (distinct.size() != edges.size()) return false;
  for (int ei : edges) {
    if (ei < 0 || ei >= g.edge_count()) return false;
    --need[g.edge_u(ei)];
    --need[g.edge_v(ei)];
  }
  for (int v = 0; v < g.node_count(); ++v)
    if (need[v] != 0) return false;
  return true;
}

bool is_arborescence(const WeightedDigraph& d, const EdgeIndexSet& edges) {
  const int n = d.node_count();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> in_deg(n, 0), parent(n, -1);
  for (int ei : edges) {
    if (ei < 0 || ei >= d.edge_count()) return false;
    int h = d.edge_head(ei);
    if (h == d.root_index()) return false;
    if (++in_deg[h] > 1) return false;
    parent[h] = d.edge_tail(ei);
  }
  // every non-root node must reach the root through parents, acyclically
  for (int v = 0; v < n; ++v) {
    if (v == d.root_index()) continue;
    int cur = v, steps = 0;
    while (cur != d.root_index()) {
      if (parent[cur] < 0 || ++steps > n) return false;
      cur = parent[cur];
    }
  }
  return true;
}

bool is_closed_walk(const WeightedGraph& g, const std::vector<int>& edge_sequence) {
  if (edge_sequence.empty()) return false;
  // the walk is closed if consecutive edges chain and the ends meet; try
  // both orientations of the first edge
  for (int start : {g.edge_u(edge_sequence[0]), g.edge_v(edge_sequence[0])}) {
    int cur = start;
    bool ok = true;
    for (int ei : edge_sequence) {
      if (g.edge_u(ei) == cur) cur = g.edge_v(ei);
      else if (g.edge_v(ei) == cur) cur = g.edge_u(ei);
      else { ok = false; break; }
    }
    if (ok && cur == start) return true;
  }
  return false;
}

bool is_simple_cycle(const WeightedGraph& g, const std::vector<int>& edge_sequence) {
  if (edge_sequence.size() < 2 || !is_closed_walk(g, edge_sequence)) return false;
  std::set<int> edges(edge_sequence.begin(), edge_sequence.end());
  if (edges.size() != edge_sequence.size()) return false;
  std::vector<int> deg(g.node_count(), 0);
  for (int ei : edge_sequence) {
    ++deg[g.edge_u(ei)];
    ++deg[g.edge_v(ei)];
  }
  for (int v = 0; v < g.node_count(); ++v)
    if (deg[v] != 0 && deg[v] != 2) return false;
  return true;
}

Rational edge_set_weight(const WeightedGraph& g, const EdgeIndexSet& edges) {
  Rational sum = 0;
  for (int ei : edges) sum += g.edge(ei).weight;
  return sum;
}

Rational edge_set_cost(const WeightedDigraph& d, const EdgeIndexSet& edges) {
  Rational sum = 0;
  for (int ei : edges) sum += d.edge(ei).cost;
  return sum;
}

bool is_matching_covered(const WeightedGraph& g, const EnumerationBudget& budget) {
  if (g.node_count() == 0 || !is_connected(g)) return false;
  auto matchings = enumerate_perfect_matchings(g, budget);
  if (matchings.empty()) return false;
  std::vector<char> covered(g.edge_count(), 0);
  for (const EdgeIndexSet& m : matchings)
    for (int ei : m) covered[ei] = 1;
  for (int ei = 0; ei < g.edge_count(); ++ei)
    if (!covered[ei]) return false;
  return true;
}

} // namespace mcg
