#include "symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "decomposition.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace mcg {

NodeInducedResult check_node_induced(const WeightedGraph& g) {
  const int m = g.edge_count(), n = g.node_count();
  RatMatrix a(m, n);
  std::vector<Rational> b(m);
  for (int ei = 0; ei < m; ++ei) {
    a.at(ei, g.edge_u(ei)) = 1;
    a.at(ei, g.edge_v(ei)) = 1;
    b[ei] = g.edge(ei).weight;
  }
  AffineResult res = solve_affine(a, b);
  if (auto* sol = std::get_if<AffineSolution>(&res)) {
    NodePotential f;
    for (int v = 0; v < n; ++v) f.values[g.node(v)] = sol->particular[v];
    return f;
  }
  const auto& cert = std::get<InfeasibilityCertificate>(res);
  PotentialObstruction obstruction;
  Rational sum = 0;
  for (int ei = 0; ei < m; ++ei) {
    if (cert.row_combination[ei] == 0) continue;
    obstruction.edge_coefficients[g.edge(ei).id] = cert.row_combination[ei];
    sum += cert.row_combination[ei] * g.edge(ei).weight;
  }
  obstruction.weighted_sum = sum;
  return obstruction;
}

Rational alternating_weight(const WeightedGraph& g, const std::vector<int>& edge_sequence) {
  Rational sum = 0;
  for (std::size_t i = 0; i < edge_sequence.size(); ++i) {
    const Rational& w = g.edge(edge_sequence[i]).weight;
    if (i % 2 == 0) sum += w; else sum -= w;
  }
  return sum;
}

namespace {

// Fixed odd closed walk through every node of a non-bipartite component:
// shortest path to a reference odd cycle, around the cycle, and back.
struct OddWalkPlan {
  std::vector<int> cycle_edges;  // cycle order
  std::vector<int> cycle_nodes;  // cycle_nodes[i] is the start of cycle_edges[i]
  std::map<int, std::vector<int>> path_to_cycle; // node -> edge sequence toward the cycle
  std::map<int, int> contact;                    // node -> cycle node the path reaches
};

// First odd cycle in DFS order (edges explored in document order from the
// smallest node of the component).
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_odd_cycle(
    const WeightedGraph& g, const std::vector<int>& component) {
  std::map<int, int> parity, parent, parent_edge, depth;
  int start = component.front();
  parity[start] = 0;
  parent[start] = -1;
  parent_edge[start] = -1;
  depth[start] = 0;

  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
  auto dfs = [&](auto&& self, int u) -> bool {
    for (int ei : g.incident_edges(u)) {
      if (ei == parent_edge[u]) continue;
      int v = g.other_end(ei, u);
      auto it = parity.find(v);
      if (it == parity.end()) {
        parity[v] = 1 - parity[u];
        parent[v] = u;
        parent_edge[v] = ei;
        depth[v] = depth[u] + 1;
        if (self(self, v)) return true;
      } else if (it->second == parity[u] && depth[v] <= depth[u]) {
        // ancestor back edge closing an odd cycle: v ... u, then ei back to v
        std::vector<int> cedges, cnodes;
        int cur = u;
        std::vector<int> up_edges, up_nodes;
        while (cur != v) {
          up_edges.push_back(parent_edge[cur]);
          up_nodes.push_back(cur);
          cur = parent[cur];
        }
        cnodes.push_back(v);
        for (std::size_t i = up_edges.size(); i-- > 0;) {
          cedges.push_back(up_edges[i]);
          if (i > 0) cnodes.push_back(up_nodes[i]);
        }
        if (!up_nodes.empty()) cnodes.push_back(up_nodes[0]);
        cedges.push_back(ei);
        found = std::make_pair(std::move(cedges), std::move(cnodes));
        return true;
      }
    }
    return false;
  };
  dfs(dfs, start);
  return found;
}

OddWalkPlan plan_odd_walks(const WeightedGraph& g, const std::vector<int>& component) {
  auto cycle = find_odd_cycle(g, component);
  if (!cycle) throw alarm_error("odd walk plan requested for a bipartite component");
  OddWalkPlan plan;
  plan.cycle_edges = cycle->first;
  plan.cycle_nodes = cycle->second;

  // Multi-source BFS from the cycle; ties broken toward the smaller edge id.
  std::set<int> on_cycle(plan.cycle_nodes.begin(), plan.cycle_nodes.end());
  std::map<int, int> dist;
  std::deque<int> queue;
  for (int v : component) {
    if (on_cycle.count(v)) {
      dist[v] = 0;
      plan.path_to_cycle[v] = {};
      plan.contact[v] = v;
      queue.push_back(v);
    }
  }
  // settle BFS layers first
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int ei : g.incident_edges(u)) {
      int v = g.other_end(ei, u);
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  // then fix each node's step: the lowest-id edge into the previous layer
  std::vector<int> order(component.begin(), component.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });
  for (int v : order) {
    if (dist[v] == 0) continue;
    int best = -1;
    for (int ei : g.incident_edges(v)) {
      int u = g.other_end(ei, v);
      if (dist[u] != dist[v] - 1) continue;
      if (best < 0 || edge_id_less(g, ei, best)) best = ei;
    }
    int prev = g.other_end(best, v);
    std::vector<int> path{best};
    const std::vector<int>& rest = plan.path_to_cycle[prev];
    path.insert(path.end(), rest.begin(), rest.end());
    plan.path_to_cycle[v] = std::move(path);
    plan.contact[v] = plan.contact[prev];
  }
  return plan;
}

// The cycle rotated to start and end at the given contact node.
std::vector<int> rotate_cycle(const OddWalkPlan& plan, int contact) {
  std::size_t k = plan.cycle_nodes.size();
  std::size_t at = 0;
  while (at < k && plan.cycle_nodes[at] != contact) ++at;
  std::vector<int> out;
  for (std::size_t i = 0; i < plan.cycle_edges.size(); ++i)
    out.push_back(plan.cycle_edges[(at + i) % plan.cycle_edges.size()]);
  return out;
}

std::vector<int> odd_walk_through(const OddWalkPlan& plan, int node) {
  std::vector<int> walk = plan.path_to_cycle.at(node);
  std::vector<int> cycle = rotate_cycle(plan, plan.contact.at(node));
  walk.insert(walk.end(), cycle.begin(), cycle.end());
  const std::vector<int>& back = plan.path_to_cycle.at(node);
  for (auto it = back.rbegin(); it != back.rend(); ++it) walk.push_back(*it);
  return walk;
}

// Bipartite component: anchor at the smallest node id, alternating-sum paths.
struct PathPlan {
  int anchor;
  std::map<int, std::vector<int>> path_to_anchor; // first edge incident to the node
};

PathPlan plan_paths(const WeightedGraph& g, const std::vector<int>& component) {
  int anchor = component.front();
  for (int v : component)
    if (g.node(v) < g.node(anchor)) anchor = v;
  PathPlan plan;
  plan.anchor = anchor;

  std::map<int, int> dist;
  dist[anchor] = 0;
  plan.path_to_anchor[anchor] = {};
  std::deque<int> queue{anchor};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int ei : g.incident_edges(u)) {
      int v = g.other_end(ei, u);
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<int> order(component.begin(), component.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });
  for (int v : order) {
    if (v == anchor) continue;
    int best = -1;
    for (int ei : g.incident_edges(v)) {
      int u = g.other_end(ei, v);
      if (dist[u] != dist[v] - 1) continue;
      if (best < 0 || edge_id_less(g, ei, best)) best = ei;
    }
    int prev = g.other_end(best, v);
    std::vector<int> path{best};
    const std::vector<int>& rest = plan.path_to_anchor[prev];
    path.insert(path.end(), rest.begin(), rest.end());
    plan.path_to_anchor[v] = std::move(path);
  }
  return plan;
}

} // namespace

WalkPotentialResult reconstruct_potential_by_walks(const WeightedGraph& g) {
  std::vector<Rational> f(g.node_count());
  std::vector<char> component_bipartite(g.node_count(), 0);
  std::vector<const PathPlan*> path_plan_of(g.node_count(), nullptr);
  std::vector<std::unique_ptr<PathPlan>> path_plans;
  std::vector<const OddWalkPlan*> odd_plan_of(g.node_count(), nullptr);
  std::vector<std::unique_ptr<OddWalkPlan>> odd_plans;

  for (const std::vector<int>& component : connected_components(g)) {
    bool bipartite = true;
    {
      // parity via BFS restricted to the component
      std::map<int, int> parity;
      parity[component.front()] = 0;
      std::deque<int> queue{component.front()};
      while (!queue.empty() && bipartite) {
        int u = queue.front();
        queue.pop_front();
        for (int ei : g.incident_edges(u)) {
          int v = g.other_end(ei, u);
          auto it = parity.find(v);
          if (it == parity.end()) {
            parity[v] = 1 - parity[u];
            queue.push_back(v);
          } else if (it->second == parity[u]) {
            bipartite = false;
            break;
          }
        }
      }
    }

    if (bipartite) {
      auto plan = std::make_unique<PathPlan>(plan_paths(g, component));
      // f(u) = alternating sum along the fixed path; f(anchor) = 0
      for (int v : component) {
        f[v] = alternating_weight(g, plan->path_to_anchor[v]);
        component_bipartite[v] = 1;
        path_plan_of[v] = plan.get();
      }
      path_plans.push_back(std::move(plan));
    } else {
      auto plan = std::make_unique<OddWalkPlan>(plan_odd_walks(g, component));
      // f(v) = half the alternating sum around the fixed odd closed walk
      for (int v : component) {
        f[v] = alternating_weight(g, odd_walk_through(*plan, v)) / 2;
        odd_plan_of[v] = plan.get();
      }
      odd_plans.push_back(std::move(plan));
    }
  }

  // Sweep every edge; the first mismatch assembles an unbalanced even walk.
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    int u = g.edge_u(ei), v = g.edge_v(ei);
    if (f[u] + f[v] == g.edge(ei).weight) continue;

    std::vector<int> walk;
    if (component_bipartite[u]) {
      // path(u -> anchor), reversed path(v -> anchor), edge back to u
      const PathPlan& plan = *path_plan_of[u];
      const std::vector<int>& pu = plan.path_to_anchor.at(u);
      const std::vector<int>& pv = plan.path_to_anchor.at(v);
      walk = pu;
      for (auto it = pv.rbegin(); it != pv.rend(); ++it) walk.push_back(*it);
      walk.push_back(ei);
    } else {
      // odd walk at u, the edge, odd walk at v, the edge again
      const OddWalkPlan& plan = *odd_plan_of[u];
      walk = odd_walk_through(plan, u);
      walk.push_back(ei);
      std::vector<int> wv = odd_walk_through(plan, v);
      walk.insert(walk.end(), wv.begin(), wv.end());
      walk.push_back(ei);
    }
    Rational sum = alternating_weight(g, walk);
    if (walk.size() % 2 != 0 || sum == 0)
      throw alarm_error("walk witness construction failed its own invariant");
    return UnbalancedWalk{std::move(walk), std::move(sum)};
  }

  NodePotential out;
  for (int v = 0; v < g.node_count(); ++v) out.values[g.node(v)] = f[v];
  return out;
}

std::optional<CycleViolation> check_even_cycle_symmetry(const WeightedGraph& g,
                                                        const EnumerationBudget& budget) {
  for (const AlternatingCycle& c : enumerate_even_cycles(g, budget)) {
    Rational dot = 0;
    for (const auto& [ei, sign] : c.nu) dot += Rational(sign) * g.edge(ei).weight;
    if (dot != 0) return CycleViolation{c, dot};
  }
  return std::nullopt;
}

bool even_cycle_symmetry_by_basis(const WeightedGraph& g, const EnumerationBudget& budget) {
  auto cycles = enumerate_even_cycles(g, budget);
  // Row-reduce the cycle vectors to a basis, then test orthogonality of w.
  const int m = g.edge_count();
  std::vector<std::vector<Rational>> basis; // echelon rows, pivot -> row
  std::vector<int> pivot_of_row;
  for (const AlternatingCycle& c : cycles) {
    std::vector<Rational> row(m, Rational(0));
    for (const auto& [ei, sign] : c.nu) row[ei] = sign;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      int p = pivot_of_row[k];
      if (row[p] == 0) continue;
      Rational factor = row[p] / basis[k][p];
      for (int j = 0; j < m; ++j) row[j] -= factor * basis[k][j];
    }
    int pivot = -1;
    for (int j = 0; j < m; ++j)
      if (row[j] != 0) { pivot = j; break; }
    if (pivot >= 0) {
      basis.push_back(std::move(row));
      pivot_of_row.push_back(pivot);
    }
  }
  for (const std::vector<Rational>& row : basis) {
    Rational dot = 0;
    for (int j = 0; j < m; ++j)
      if (row[j] != 0) dot += row[j] * g.edge(j).weight;
    if (dot != 0) return false;
  }
  return true;
}

MatchingEqualityResult check_pm_equality(const WeightedGraph& g, const EnumerationBudget& budget) {
  auto matchings = enumerate_perfect_matchings(g, budget);
  if (matchings.empty())
    throw not_applicable_error("matching equality: graph has no perfect matching");
  std::size_t argmin = 0, argmax = 0;
  std::vector<Rational> weights;
  weights.reserve(matchings.size());
  for (const auto& m : matchings) weights.push_back(edge_set_weight(g, m));
  for (std::size_t i = 1; i < matchings.size(); ++i) {
    if (weights[i] < weights[argmin]) argmin = i;
    if (weights[i] > weights[argmax]) argmax = i;
  }
  if (weights[argmin] == weights[argmax]) return weights[argmin];
  return MatchingPair{matchings[argmin], matchings[argmax], weights[argmin], weights[argmax]};
}

namespace {

struct ExtremeTable {
  Rational global_min, global_max;
  std::vector<Rational> edge_min, edge_max; // per edge, over matchings through it
  std::vector<char> edge_covered;
};

ExtremeTable extreme_table(const WeightedGraph& g, const EnumerationBudget& budget) {
  auto matchings = enumerate_perfect_matchings(g, budget);
  if (matchings.empty())
    throw not_applicable_error("edge extremes: graph has no perfect matching");
  ExtremeTable t;
  t.edge_min.resize(g.edge_count());
  t.edge_max.resize(g.edge_count());
  t.edge_covered.assign(g.edge_count(), 0);
  bool first = true;
  for (const auto& m : matchings) {
    Rational w = edge_set_weight(g, m);
    if (first || w < t.global_min) t.global_min = w;
    if (first || w > t.global_max) t.global_max = w;
    first = false;
    for (int ei : m) {
      if (!t.edge_covered[ei]) {
        t.edge_covered[ei] = 1;
        t.edge_min[ei] = t.edge_max[ei] = w;
      } else {
        if (w < t.edge_min[ei]) t.edge_min[ei] = w;
        if (w > t.edge_max[ei]) t.edge_max[ei] = w;
      }
    }
  }
  return t;
}

std::optional<EdgeExtremeViolation> scan_extremes(const WeightedGraph& g, const ExtremeTable& t) {
  // min-side sweep over edges in id order, then max-side
  std::vector<int> order(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
  order = sort_edges_by_id(g, std::move(order));
  for (int ei : order)
    if (t.edge_min[ei] != t.global_min)
      return EdgeExtremeViolation{ei, true, t.edge_min[ei], t.global_min};
  for (int ei : order)
    if (t.edge_max[ei] != t.global_max)
      return EdgeExtremeViolation{ei, false, t.edge_max[ei], t.global_max};
  return std::nullopt;
}

} // namespace

std::optional<EdgeExtremeViolation> check_edge_minmax(const WeightedGraph& g,
                                                      const EnumerationBudget& budget) {
  if (!is_matching_covered(g, budget))
    throw not_applicable_error("edge min-max check requires a matching-covered graph");
  return scan_extremes(g, extreme_table(g, budget));
}

std::optional<EdgeExtremeViolation> find_extreme_shifting_edge(const WeightedGraph& g,
                                                               const EnumerationBudget& budget) {
  if (!is_matching_covered(g, budget))
    throw not_applicable_error("extreme-shifting search requires a matching-covered graph");
  ExtremeTable t = extreme_table(g, budget);
  if (t.global_min == t.global_max)
    throw not_applicable_error("extreme-shifting search: all perfect matchings weigh the same");
  return scan_extremes(g, t);
}

SpaceDimensions space_dimensions(const WeightedGraph& g, const EnumerationBudget& budget) {
  SpaceDimensions out{};
  const int n = g.node_count(), m = g.edge_count();

  RatMatrix incidence(m, n);
  for (int ei = 0; ei < m; ++ei) {
    incidence.at(ei, g.edge_u(ei)) = 1;
    incidence.at(ei, g.edge_v(ei)) = 1;
  }
  out.dim_node_induced = rank(incidence);

  auto cycles = enumerate_even_cycles(g, budget);
  RatMatrix cycle_rows(static_cast<int>(cycles.size()), m);
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    for (const auto& [ei, sign] : cycles[i].nu) cycle_rows.at(i, ei) = sign;
  out.dim_cycle_space = rank(cycle_rows);
  out.rank_identity = (out.dim_cycle_space + out.dim_node_induced == m);

  int bipartite_components = 0;
  for (const std::vector<int>& component : connected_components(g)) {
    std::map<int, int> parity;
    bool bipartite = true;
    parity[component.front()] = 0;
    std::deque<int> queue{component.front()};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int ei : g.incident_edges(u)) {
        int v = g.other_end(ei, u);
        auto it = parity.find(v);
        if (it == parity.end()) {
          parity[v] = 1 - parity[u];
          queue.push_back(v);
        } else if (it->second == parity[u]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) ++bipartite_components;
  }
  out.bipartite_components = bipartite_components;
  out.formula_node_induced = n - bipartite_components;

  // the rank identity decomposes componentwise, so the block condition is
  // per component as well
  std::vector<int> component_of(n, -1);
  {
    int cix = 0;
    for (const std::vector<int>& component : connected_components(g)) {
      for (int v : component) component_of[v] = cix;
      ++cix;
    }
    std::map<int, int> nonbip_blocks;
    for (const Block& blk : block_decomposition(g).blocks)
      if (!blk.bipartite) ++nonbip_blocks[component_of[blk.node_indices.front()]];
    out.at_most_one_nonbipartite_block = true;
    for (const auto& [comp, cnt] : nonbip_blocks)
      if (cnt > 1) out.at_most_one_nonbipartite_block = false;
  }

  auto matchings = enumerate_perfect_matchings(g, budget);
  if (!matchings.empty()) {
    RatMatrix rows(static_cast<int>(matchings.size()), m);
    for (int i = 0; i < static_cast<int>(matchings.size()); ++i)
      for (int ei : matchings[i]) rows.at(i, ei) = 1;
    out.dim_matching_span = rank(rows);
    out.dim_matching_equality = m - (*out.dim_matching_span - 1);
  }

  // one budget governs the whole call, including the decomposition step
  if (is_matching_covered(g, budget) && n <= budget.max_nodes) {
    out.brick_count = tight_cut_decomposition(g, budget).bricks;
    out.formula_matching_span = m - n + 2 - *out.brick_count;
    out.formula_matching_equality = n - 1 + *out.brick_count;
  }

  // every closed-form value must agree with the computed rank; these are
  // theorems, so a mismatch is an implementation fault
  if (out.dim_node_induced != out.formula_node_induced)
    throw alarm_error("incidence rank disagrees with the component count formula");
  if (out.rank_identity != out.at_most_one_nonbipartite_block)
    throw alarm_error("cycle-space rank identity disagrees with the block condition");
  if (out.brick_count.has_value()) {
    if (out.dim_matching_span != out.formula_matching_span)
      throw alarm_error("matching span rank disagrees with the brick count formula");
    if (out.dim_matching_equality != out.formula_matching_equality)
      throw alarm_error("matching equality dimension disagrees with the brick count formula");
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "not_applicable";
  }
}

PropertyReport property_report(const WeightedGraph& g, const EnumerationBudget& budget) {
  PropertyReport report;
  report.matching_covered = is_matching_covered(g, budget);

  NodeInducedResult ind = check_node_induced(g);
  if (auto* f = std::get_if<NodePotential>(&ind)) {
    report.node_induced = Verdict::yes;
    report.potential = *f;
  } else {
    report.node_induced = Verdict::no;
    report.obstruction = std::get<PotentialObstruction>(ind);
  }

  WalkPotentialResult walk = reconstruct_potential_by_walks(g);
  if (auto* f = std::get_if<NodePotential>(&walk)) {
    report.even_walk = Verdict::yes;
    if (!report.potential) report.potential = *f;
  } else {
    report.even_walk = Verdict::no;
    report.walk_witness = std::get<UnbalancedWalk>(walk);
  }
  if (report.node_induced != report.even_walk)
    throw alarm_error("node-potential routes disagree (solver vs walk construction)");

  auto cycle = check_even_cycle_symmetry(g, budget);
  report.even_cycle = cycle ? Verdict::no : Verdict::yes;
  if (cycle) report.cycle_witness = *cycle;
  if (even_cycle_symmetry_by_basis(g, budget) != (report.even_cycle == Verdict::yes))
    throw alarm_error("cycle symmetry check disagrees with its basis form");

  // sampled even closed walks can only falsify the walk verdict
  if (report.even_walk == Verdict::yes) {
    for (const ClosedWalk& w : sample_even_closed_walks(g, 16, 10, budget.seed))
      if (alternating_weight(g, w.edge_sequence) != 0)
        throw alarm_error("sampled even walk contradicts the even-walk verdict");
  }

  if (report.matching_covered || !enumerate_perfect_matchings(g, budget).empty()) {
    MatchingEqualityResult eq = check_pm_equality(g, budget);
    if (auto* common = std::get_if<Rational>(&eq)) {
      report.matching_equality = Verdict::yes;
      report.common_weight = *common;
    } else {
      report.matching_equality = Verdict::no;
      report.matching_witness = std::get<MatchingPair>(eq);
    }
  }

  if (report.matching_covered) {
    auto emx = check_edge_minmax(g, budget);
    report.edge_minmax = emx ? Verdict::no : Verdict::yes;
    if (emx) report.edge_witness = *emx;

    auto holds = [](Verdict v) { return v == Verdict::yes ? 1 : 0; };
    int chain[5] = {holds(report.node_induced), holds(report.even_walk),
                    holds(report.even_cycle), holds(report.matching_equality),
                    holds(report.edge_minmax)};
    for (int i = 0; i + 1 < 5; ++i)
      if (chain[i] > chain[i + 1])
        throw alarm_error("property hierarchy violated on a matching-covered graph");
  }
  return report;
}

} // namespace mcg
