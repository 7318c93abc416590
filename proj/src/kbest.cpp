#include "kbest.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "errors.hpp"

namespace mcg {

namespace {

// positions are strictly increasing indices into a pool of size n
bool next_combination(std::vector<int>& positions, int n) {
  const int k = static_cast<int>(positions.size());
  for (int i = k - 1; i >= 0; --i) {
    if (positions[i] < n - k + i) {
      ++positions[i];
      for (int j = i + 1; j < k; ++j) positions[j] = positions[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool edges_form_matching(const WeightedGraph& g, const std::vector<int>& edges) {
  std::vector<char> covered(g.node_count(), 0);
  for (int ei : edges) {
    int a = g.edge_u(ei), b = g.edge_v(ei);
    if (covered[a] || covered[b]) return false;
    covered[a] = covered[b] = 1;
  }
  return true;
}

// demand maps must name every node; zero demand is only allowed on isolated
// nodes (they simply drop out of the reduction)
std::map<std::string, long> validated_demand(const WeightedGraph& g,
                                             const std::map<std::string, long>& b) {
  std::map<std::string, long> out;
  for (int v = 0; v < g.node_count(); ++v) {
    auto it = b.find(g.node(v));
    if (it == b.end()) throw input_error("demand value missing for node " + g.node(v));
    if (it->second < 0) throw input_error("negative demand at node " + g.node(v));
    if (it->second == 0 && !g.incident_edges(v).empty())
      throw input_error("zero demand at non-isolated node " + g.node(v));
    out[g.node(v)] = it->second;
  }
  return out;
}

} // namespace

std::optional<ConstrainedMatching> min_weight_pm_constrained(const WeightedGraph& g,
                                                             const EdgeIndexSet& forced,
                                                             const EdgeIndexSet& forbidden,
                                                             const EnumerationBudget& budget) {
  if (g.node_count() > budget.max_nodes)
    throw budget_error("graph exceeds the matching node budget");
  std::vector<char> blocked(g.edge_count(), 0);
  for (int ei : forbidden) blocked[ei] = 1;
  for (int ei : forced)
    if (blocked[ei]) throw input_error("an edge is both forced and forbidden");
  if (g.node_count() % 2 != 0) return std::nullopt;

  std::vector<char> covered(g.node_count(), 0);
  for (int ei : forced) {
    int a = g.edge_u(ei), b = g.edge_v(ei);
    if (covered[a] || covered[b]) throw input_error("forced edges do not form a matching");
    covered[a] = covered[b] = 1;
  }

  // cheapest conceivable completion adds at most every available negative
  // weight, so that sum gives a valid admissible bound
  Rational negatives = make_rational(0);
  for (int ei = 0; ei < g.edge_count(); ++ei)
    if (!blocked[ei] && g.edge(ei).weight < 0) negatives += g.edge(ei).weight;

  std::optional<ConstrainedMatching> best;
  std::vector<int> chosen(forced.begin(), forced.end());
  Rational running = make_rational(0);
  for (int ei : forced) running += g.edge(ei).weight;
  long steps = 0;

  auto descend = [&](auto&& self) -> void {
    if (++steps > budget.max_items)
      throw budget_error("constrained matching search exceeded the item budget");
    if (best && running + negatives > best->weight) return;
    int v = -1;
    for (int i = 0; i < g.node_count(); ++i)
      if (!covered[i]) {
        v = i;
        break;
      }
    if (v < 0) {
      EdgeIndexSet m = canonical_edge_set(g, chosen);
      if (!best || running < best->weight ||
          (running == best->weight && edge_set_less(g, m, best->matching)))
        best = ConstrainedMatching{std::move(m), running};
      return;
    }
    for (int ei : g.incident_edges(v)) {
      if (blocked[ei]) continue;
      int o = g.other_end(ei, v);
      if (covered[o]) continue;
      covered[v] = covered[o] = 1;
      chosen.push_back(ei);
      running += g.edge(ei).weight;
      self(self);
      running -= g.edge(ei).weight;
      chosen.pop_back();
      covered[v] = covered[o] = 0;
    }
  };
  descend(descend);
  return best;
}

WeightSpectrum pm_weight_spectrum(const WeightedGraph& g, const EnumerationBudget& budget) {
  std::vector<EdgeIndexSet> pms = enumerate_perfect_matchings(g, budget);
  if (pms.empty()) throw not_applicable_error("graph has no perfect matching");
  std::set<Rational> distinct;
  for (const EdgeIndexSet& m : pms) distinct.insert(edge_set_weight(g, m));
  return {std::vector<Rational>(distinct.begin(), distinct.end())};
}

ForcingCertificate lth_smallest_pm_forcing_set(const WeightedGraph& g, int level,
                                               const EnumerationBudget& budget) {
  if (level < 1) throw input_error("level must be at least 1");
  std::vector<EdgeIndexSet> pms = enumerate_perfect_matchings(g, budget);
  if (pms.empty()) throw not_applicable_error("graph has no perfect matching");
  std::vector<Rational> weights;
  weights.reserve(pms.size());
  std::set<Rational> distinct;
  for (const EdgeIndexSet& m : pms) {
    weights.push_back(edge_set_weight(g, m));
    distinct.insert(weights.back());
  }
  if (level > static_cast<int>(distinct.size()))
    throw not_applicable_error("level exceeds the number of distinct matching weights");
  Rational target = *std::next(distinct.begin(), level - 1);

  const bool bipartite = std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(g));
  const int bound = bipartite ? level - 1 : 2 * (level - 1);
  if (level == 1) return {{}, {}, 1, target, bound};

  // any workable forced set lies inside a matching of the target weight, so
  // those matchings' edges are the complete candidate pool
  std::set<int> pool_set;
  for (std::size_t i = 0; i < pms.size(); ++i)
    if (weights[i] == target) pool_set.insert(pms[i].begin(), pms[i].end());
  std::vector<int> pool = sort_edges_by_id(g, std::vector<int>(pool_set.begin(), pool_set.end()));

  std::vector<std::vector<char>> member(pms.size(), std::vector<char>(g.edge_count(), 0));
  for (std::size_t i = 0; i < pms.size(); ++i)
    for (int ei : pms[i]) member[i][ei] = 1;

  long tried = 0;
  for (int k = 1; k <= bound && k <= static_cast<int>(pool.size()); ++k) {
    std::vector<int> positions(k);
    for (int i = 0; i < k; ++i) positions[i] = i;
    do {
      if (++tried > budget.max_items)
        throw budget_error("forcing search exceeded the item budget");
      std::vector<int> candidate(k);
      for (int i = 0; i < k; ++i) candidate[i] = pool[positions[i]];
      if (!edges_form_matching(g, candidate)) continue;

      std::optional<Rational> constrained;
      bool beaten = false;
      for (std::size_t i = 0; i < pms.size() && !beaten; ++i) {
        bool inside = true;
        for (int ei : candidate)
          if (!member[i][ei]) {
            inside = false;
            break;
          }
        if (!inside) continue;
        if (weights[i] < target) beaten = true;
        if (!constrained || weights[i] < *constrained) constrained = weights[i];
      }
      if (beaten || !constrained || *constrained != target) continue;

      EdgeIndexSet forced = canonical_edge_set(g, candidate);
      auto check = min_weight_pm_constrained(g, forced, {}, budget);
      if (!check || check->weight != target)
        throw alarm_error("forcing candidate failed the independent re-solve");
      return {forced, {}, level, target, bound};
    } while (next_combination(positions, static_cast<int>(pool.size())));
  }
  throw alarm_error("no forcing set exists within the guaranteed size bound");
}

GadgetMap bfactor_gadget(const WeightedGraph& g, const std::map<std::string, long>& b) {
  std::map<std::string, long> demand = validated_demand(g, b);

  std::vector<std::string> nodes;
  std::map<std::string, std::vector<std::string>> copies;
  for (int v = 0; v < g.node_count(); ++v) {
    const std::string& id = g.node(v);
    for (long i = 1; i <= demand[id]; ++i) {
      nodes.push_back(id + ":" + std::to_string(i));
      copies[id].push_back(nodes.back());
    }
  }
  for (const GraphEdge& e : g.edges()) {
    nodes.push_back("p:" + e.id + ":" + e.u);
    nodes.push_back("p:" + e.id + ":" + e.v);
  }

  std::vector<GraphEdge> edges;
  std::map<std::string, EdgeGadget> per_edge;
  std::map<std::string, std::pair<std::string, bool>> origin;
  for (const GraphEdge& e : g.edges()) {
    const std::string pu = "p:" + e.id + ":" + e.u;
    const std::string pv = "p:" + e.id + ":" + e.v;
    EdgeGadget parts;
    parts.inner = "in:" + e.id;
    edges.push_back(GraphEdge{parts.inner, pu, pv, make_rational(0)});
    origin[parts.inner] = {e.id, true};
    const Rational half = e.weight / 2;
    for (long i = 1; i <= demand[e.u]; ++i) {
      std::string id = "out:" + e.id + ":" + e.u + ":" + std::to_string(i);
      edges.push_back(GraphEdge{id, e.u + ":" + std::to_string(i), pu, half});
      parts.outer_u.push_back(id);
      origin[id] = {e.id, false};
    }
    for (long i = 1; i <= demand[e.v]; ++i) {
      std::string id = "out:" + e.id + ":" + e.v + ":" + std::to_string(i);
      edges.push_back(GraphEdge{id, e.v + ":" + std::to_string(i), pv, half});
      parts.outer_v.push_back(id);
      origin[id] = {e.id, false};
    }
    per_edge[e.id] = std::move(parts);
  }

  GadgetMap gm{g,
               std::move(demand),
               WeightedGraph(std::move(nodes), std::move(edges)),
               std::move(per_edge),
               std::move(copies),
               std::move(origin),
               std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(g))};
  return gm;
}

EdgeIndexSet bfactor_from_pm(const GadgetMap& gm, const EdgeIndexSet& pm) {
  if (!is_perfect_matching(gm.derived, pm))
    throw input_error("not a perfect matching of the derived graph");
  std::set<int> in_pm(pm.begin(), pm.end());
  std::vector<int> selection;
  for (int ei = 0; ei < gm.source.edge_count(); ++ei) {
    const std::string& inner = gm.per_edge.at(gm.source.edge(ei).id).inner;
    if (!in_pm.count(gm.derived.edge_index(inner))) selection.push_back(ei);
  }
  EdgeIndexSet out = canonical_edge_set(gm.source, selection);
  if (!is_b_factor(gm.source, gm.demand, out))
    throw alarm_error("projected edge set misses the demand map");
  return out;
}

EdgeIndexSet pm_from_bfactor(const GadgetMap& gm, const EdgeIndexSet& selection) {
  if (!is_b_factor(gm.source, gm.demand, selection))
    throw input_error("edge set does not satisfy the demand map");
  std::set<int> selected(selection.begin(), selection.end());
  std::map<std::string, std::size_t> next_copy;
  std::vector<int> matching;
  for (int ei = 0; ei < gm.source.edge_count(); ++ei) {
    const GraphEdge& e = gm.source.edge(ei);
    const EdgeGadget& parts = gm.per_edge.at(e.id);
    if (!selected.count(ei)) {
      matching.push_back(gm.derived.edge_index(parts.inner));
      continue;
    }
    matching.push_back(gm.derived.edge_index(parts.outer_u[next_copy[e.u]++]));
    matching.push_back(gm.derived.edge_index(parts.outer_v[next_copy[e.v]++]));
  }
  EdgeIndexSet out = canonical_edge_set(gm.derived, matching);
  if (!is_perfect_matching(gm.derived, out))
    throw alarm_error("routed copies do not form a perfect matching");
  return out;
}

WeightSpectrum bfactor_weight_spectrum(const WeightedGraph& g,
                                       const std::map<std::string, long>& b,
                                       const EnumerationBudget& budget) {
  std::map<std::string, long> demand = validated_demand(g, b);
  std::vector<EdgeIndexSet> all = enumerate_b_factors(g, demand, budget);
  if (all.empty()) throw not_applicable_error("no edge set satisfies the demand map");
  std::set<Rational> distinct;
  for (const EdgeIndexSet& s : all) distinct.insert(edge_set_weight(g, s));
  return {std::vector<Rational>(distinct.begin(), distinct.end())};
}

BFactorCertificate lth_smallest_bfactor(const WeightedGraph& g,
                                        const std::map<std::string, long>& b, int level,
                                        const EnumerationBudget& budget) {
  GadgetMap gm = bfactor_gadget(g, b);
  EnumerationBudget derived_budget = budget;
  derived_budget.max_nodes = std::max(budget.max_nodes, gm.derived.node_count());

  WeightSpectrum direct = bfactor_weight_spectrum(g, gm.demand, budget);
  WeightSpectrum via_gadget = pm_weight_spectrum(gm.derived, derived_budget);
  if (direct.values != via_gadget.values)
    throw alarm_error("derived matching spectrum differs from the direct spectrum");

  ForcingCertificate inner = lth_smallest_pm_forcing_set(gm.derived, level, derived_budget);

  std::set<std::string> forced_ids, forbidden_ids;
  for (int ei : inner.forced) {
    const auto& [source_edge, is_inner] = gm.origin.at(gm.derived.edge(ei).id);
    (is_inner ? forbidden_ids : forced_ids).insert(source_edge);
  }
  for (const std::string& id : forced_ids)
    if (forbidden_ids.count(id))
      throw alarm_error("a source edge came back both forced and forbidden");

  std::vector<int> f, d;
  for (const std::string& id : forced_ids) f.push_back(g.edge_index(id));
  for (const std::string& id : forbidden_ids) d.push_back(g.edge_index(id));
  EdgeIndexSet forced = canonical_edge_set(g, f), forbidden = canonical_edge_set(g, d);

  const int bound = gm.bipartite ? level - 1 : 2 * (level - 1);
  if (bound != inner.bound)
    throw alarm_error("derived graph changed bipartiteness under the reduction");
  if (static_cast<int>(forced.size() + forbidden.size()) > bound)
    throw alarm_error("mapped forcing sets exceed the size bound");

  // re-verify against the direct enumeration
  std::set<int> fset(forced.begin(), forced.end()), dset(forbidden.begin(), forbidden.end());
  std::optional<Rational> constrained;
  for (const EdgeIndexSet& s : enumerate_b_factors(g, gm.demand, budget)) {
    std::set<int> sel(s.begin(), s.end());
    bool ok = true;
    for (int ei : fset)
      if (!sel.count(ei)) ok = false;
    for (int ei : s)
      if (dset.count(ei)) ok = false;
    if (!ok) continue;
    Rational w = edge_set_weight(g, s);
    if (!constrained || w < *constrained) constrained = w;
  }
  if (!constrained || *constrained != inner.achieved)
    throw alarm_error("mapped forcing sets do not pin the target weight");

  return {forced, forbidden, level, inner.achieved, bound, inner};
}

} // namespace mcg
