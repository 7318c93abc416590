#include "arborescence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"

namespace mcg {

namespace {

std::vector<std::string> sorted_node_ids(const WeightedDigraph& d, const std::vector<int>& ix) {
  std::vector<std::string> out;
  for (int v : ix) out.push_back(d.node(v));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeIndexSet sort_by_id(const WeightedDigraph& d, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end(),
            [&](int a, int b) { return d.edge(a).id < d.edge(b).id; });
  return edges;
}

struct SuperEdge {
  int orig;
  int tail;
  int head;
  Rational cost;
};

// One level of the classical cycle-shrinking scheme. Supers hold original
// node indices; the edge list stays in document order, so "first tight edge"
// always means first by document position.
std::vector<int> shrink(const WeightedDigraph& d, const std::vector<std::vector<int>>& supers,
                        std::vector<SuperEdge> edges, int root,
                        std::map<std::vector<std::string>, Rational>& y) {
  const int s = static_cast<int>(supers.size());
  if (s <= 1) return {};

  std::vector<int> chosen(s, -1);
  for (int v = 0; v < s; ++v) {
    if (v == root) continue;
    bool any = false;
    Rational mu;
    for (const SuperEdge& e : edges)
      if (e.head == v && (!any || e.cost < mu)) {
        mu = e.cost;
        any = true;
      }
    if (!any) throw alarm_error("super node without entering edges");
    if (mu > 0) {
      y[sorted_node_ids(d, supers[v])] += mu;
      for (SuperEdge& e : edges)
        if (e.head == v) e.cost -= mu;
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].head == v && edges[i].cost == 0) {
        chosen[v] = static_cast<int>(i);
        break;
      }
  }

  // first cycle among the chosen edges, scanning supers in index order
  std::vector<int> state(s, 0);
  state[root] = 2;
  std::vector<int> cycle;
  for (int start = 0; start < s && cycle.empty(); ++start) {
    if (state[start] != 0) continue;
    std::vector<int> path;
    int cur = start;
    while (cur != root && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = edges[chosen[cur]].tail;
    }
    if (cur != root && state[cur] == 1) {
      auto it = std::find(path.begin(), path.end(), cur);
      cycle.assign(it, path.end());
    }
    for (int v : path) state[v] = 2;
  }

  if (cycle.empty()) {
    std::vector<int> out;
    for (int v = 0; v < s; ++v)
      if (v != root) out.push_back(edges[chosen[v]].orig);
    return out;
  }

  std::vector<char> in_cycle(s, 0);
  for (int v : cycle) in_cycle[v] = 1;
  std::vector<int> remap(s, -1);
  std::vector<std::vector<int>> next_supers;
  for (int v = 0; v < s; ++v) {
    if (in_cycle[v]) continue;
    remap[v] = static_cast<int>(next_supers.size());
    next_supers.push_back(supers[v]);
  }
  const int merged = static_cast<int>(next_supers.size());
  std::vector<int> merged_set;
  for (int v : cycle) merged_set.insert(merged_set.end(), supers[v].begin(), supers[v].end());
  std::sort(merged_set.begin(), merged_set.end());
  next_supers.push_back(merged_set);
  for (int v = 0; v < s; ++v)
    if (in_cycle[v]) remap[v] = merged;

  std::vector<SuperEdge> next_edges;
  for (const SuperEdge& e : edges) {
    int t = remap[e.tail], h = remap[e.head];
    if (t == h) continue;
    next_edges.push_back({e.orig, t, h, e.cost});
  }

  std::vector<int> sub = shrink(d, next_supers, std::move(next_edges), remap[root], y);

  // exactly one returned edge enters the merged super; its head decides
  // which cycle edge is dropped on expansion
  int entered_member = -1;
  for (int orig : sub) {
    int h = d.edge_head(orig);
    if (!std::binary_search(merged_set.begin(), merged_set.end(), h)) continue;
    for (int v : cycle)
      if (std::find(supers[v].begin(), supers[v].end(), h) != supers[v].end()) entered_member = v;
    break;
  }
  if (entered_member < 0) throw alarm_error("expansion lost the entering edge");

  std::vector<int> out = sub;
  for (int v : cycle)
    if (v != entered_member) out.push_back(edges[chosen[v]].orig);
  return out;
}

// dual load of an edge: total value of support sets the edge enters
struct SupportIndex {
  std::vector<std::set<int>> sets;
  std::vector<Rational> values;

  SupportIndex(const WeightedDigraph& d, const DualCertificate& y) {
    for (const auto& [ids, val] : y.support) {
      std::set<int> s;
      for (const std::string& id : ids) s.insert(d.node_index(id));
      if (s.empty()) throw input_error("empty support set");
      if (s.count(d.root_index())) throw input_error("support set contains the root");
      sets.push_back(std::move(s));
      values.push_back(val);
    }
  }

  Rational load(const WeightedDigraph& d, int ei) const {
    Rational sum = make_rational(0);
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i].count(d.edge_head(ei)) && !sets[i].count(d.edge_tail(ei))) sum += values[i];
    return sum;
  }
};

// the lemma's pair: first non-tight edge of the target arborescence (plus
// the first other edge), else two edges entering a doubly-entered support
// set; returns edge indices, possibly equal
std::pair<int, int> extract_pair(const WeightedDigraph& d, const EdgeIndexSet& target,
                                 const DualCertificate& y) {
  SupportIndex idx(d, y);
  std::vector<int> doc(target.begin(), target.end());
  std::sort(doc.begin(), doc.end());

  int e = -1;
  for (int ei : doc)
    if (idx.load(d, ei) != d.edge(ei).cost) {
      e = ei;
      break;
    }
  if (e >= 0) {
    for (int ei : doc)
      if (ei != e) return {e, ei};
    return {e, e};
  }
  for (std::size_t i = 0; i < idx.sets.size(); ++i) {
    std::vector<int> entering;
    for (int ei : doc)
      if (idx.sets[i].count(d.edge_head(ei)) && !idx.sets[i].count(d.edge_tail(ei)))
        entering.push_back(ei);
    if (entering.size() >= 2) return {entering[0], entering[1]};
  }
  throw alarm_error("non-optimal arborescence satisfies the optimality conditions");
}

Rational constrained_minimum(const WeightedDigraph& d, const std::vector<EdgeIndexSet>& arbs,
                             const std::vector<std::string>& forced_ids) {
  std::set<int> need;
  for (const std::string& id : forced_ids) need.insert(d.edge_index(id));
  std::optional<Rational> best;
  for (const EdgeIndexSet& arb : arbs) {
    std::set<int> have(arb.begin(), arb.end());
    bool ok = true;
    for (int ei : need)
      if (!have.count(ei)) ok = false;
    if (!ok) continue;
    Rational c = edge_set_cost(d, arb);
    if (!best || c < *best) best = c;
  }
  if (!best) throw alarm_error("no arborescence contains the forced set");
  return *best;
}

std::vector<std::string> forcing_rec(const WeightedDigraph& d, int level,
                                     const EnumerationBudget& budget) {
  if (level == 1) return {};

  std::vector<EdgeIndexSet> arbs = enumerate_arborescences(d, budget);
  std::set<Rational> distinct;
  std::vector<Rational> costs;
  for (const EdgeIndexSet& a : arbs) {
    costs.push_back(edge_set_cost(d, a));
    distinct.insert(costs.back());
  }
  if (level > static_cast<int>(distinct.size()))
    throw alarm_error("recursion asked for a level past the spectrum");
  const Rational x = *std::next(distinct.begin(), level - 1);

  // first (lexicographically smallest) arborescence of the target cost
  EdgeIndexSet target;
  for (std::size_t i = 0; i < arbs.size(); ++i)
    if (costs[i] == x) {
      target = arbs[i];
      break;
    }

  OptimalArborescence opt = min_cost_arborescence_with_dual(d);
  auto [e, f] = extract_pair(d, target, opt.dual);
  const std::string e_id = d.edge(e).id, f_id = d.edge(f).id;

  ForcedContraction first = contract_forced_edge(d, e_id);
  Rational offsets = first.cost_offset;
  std::optional<ForcedContraction> second;
  const WeightedDigraph* cur = &first.digraph;
  if (f_id != e_id) {
    second = contract_forced_edge(first.digraph, f_id);
    offsets += second->cost_offset;
    cur = &second->digraph;
  }

  // the rest of the target arborescence must reappear below, at the cost
  // shifted by the contracted pair
  std::vector<int> remainder;
  for (int ei : target) {
    const std::string& id = d.edge(ei).id;
    if (id == e_id || id == f_id) continue;
    bool found = false;
    for (int k = 0; k < cur->edge_count(); ++k)
      if (cur->edge(k).id == id) {
        remainder.push_back(k);
        found = true;
        break;
      }
    if (!found) throw alarm_error("contraction deleted an edge of the target arborescence");
  }
  EdgeIndexSet rem = sort_by_id(*cur, remainder);
  if (!is_arborescence(*cur, rem))
    throw alarm_error("contracted remainder is not an arborescence");
  const Rational shifted = x - offsets;
  if (edge_set_cost(*cur, rem) != shifted)
    throw alarm_error("contraction cost bookkeeping failed");

  std::set<Rational> sub_distinct;
  for (const EdgeIndexSet& a : enumerate_arborescences(*cur, budget))
    sub_distinct.insert(edge_set_cost(*cur, a));
  int sub_level = 1;
  bool located = false;
  for (const Rational& w : sub_distinct) {
    if (w == shifted) {
      located = true;
      break;
    }
    ++sub_level;
  }
  if (!located) throw alarm_error("shifted cost is missing from the contracted spectrum");
  if (sub_level >= level) throw alarm_error("contraction failed to lower the level");

  std::vector<std::string> p = forcing_rec(*cur, sub_level, budget);
  p.push_back(e_id);
  if (f_id != e_id) p.push_back(f_id);
  return p;
}

} // namespace

std::optional<std::vector<std::string>> deficient_set(const WeightedDigraph& d) {
  std::vector<char> seen(d.node_count(), 0);
  std::vector<int> queue = {d.root_index()};
  seen[d.root_index()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int ei : d.out_edges(queue[head])) {
      int h = d.edge_head(ei);
      if (!seen[h]) {
        seen[h] = 1;
        queue.push_back(h);
      }
    }
  std::vector<std::string> missing;
  for (int v = 0; v < d.node_count(); ++v)
    if (!seen[v]) missing.push_back(d.node(v));
  if (missing.empty()) return std::nullopt;
  std::sort(missing.begin(), missing.end());
  return missing;
}

bool is_laminar(const DualCertificate& y) {
  std::vector<std::set<std::string>> sets;
  for (const auto& [ids, val] : y.support) sets.emplace_back(ids.begin(), ids.end());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      int common = 0;
      for (const std::string& id : sets[i]) common += sets[j].count(id) ? 1 : 0;
      if (common == 0) continue;
      if (common == static_cast<int>(sets[i].size()) ||
          common == static_cast<int>(sets[j].size()))
        continue;
      return false;
    }
  return true;
}

OptimalArborescence min_cost_arborescence_with_dual(const WeightedDigraph& d) {
  for (const DigraphEdge& e : d.edges())
    if (e.cost < 0) throw input_error("negative cost on edge " + e.id);
  if (deficient_set(d).has_value())
    throw not_applicable_error("no arborescence: some nodes are unreachable from the root");

  std::vector<std::vector<int>> supers;
  std::vector<SuperEdge> edges;
  for (int v = 0; v < d.node_count(); ++v) supers.push_back({v});
  for (int ei = 0; ei < d.edge_count(); ++ei)
    edges.push_back({ei, d.edge_tail(ei), d.edge_head(ei), d.edge(ei).cost});

  std::map<std::vector<std::string>, Rational> y;
  EdgeIndexSet arb = sort_by_id(d, shrink(d, supers, std::move(edges), d.root_index(), y));
  Rational cost = edge_set_cost(d, arb);

  DualCertificate dual;
  Rational total = make_rational(0);
  for (const auto& [set, val] : y)
    if (val > 0) {
      dual.support.push_back({set, val});
      total += val;
    }

  if (!is_arborescence(d, arb)) throw alarm_error("solver emitted a non-arborescence");
  if (total != cost) throw alarm_error("dual total differs from the primal cost");
  if (!is_laminar(dual)) throw alarm_error("solver dual is not laminar");
  if (verify_optimality_conditions(d, arb, dual).has_value())
    throw alarm_error("solver output failed the optimality conditions");
  return {std::move(arb), std::move(cost), std::move(dual)};
}

std::optional<OptimalityViolation> verify_optimality_conditions(const WeightedDigraph& d,
                                                                const EdgeIndexSet& arb,
                                                                const DualCertificate& y) {
  if (!is_arborescence(d, arb)) throw input_error("edge set is not an arborescence");
  for (const auto& [ids, val] : y.support)
    if (val < 0) return OptimalityViolation{InfeasibleDual{"negative value on a support set"}};
  SupportIndex idx(d, y);

  for (int ei = 0; ei < d.edge_count(); ++ei)
    if (idx.load(d, ei) > d.edge(ei).cost)
      return OptimalityViolation{InfeasibleDual{"edge " + d.edge(ei).id + " is overloaded"}};

  std::set<int> in_arb(arb.begin(), arb.end());
  for (int ei = 0; ei < d.edge_count(); ++ei) {
    if (!in_arb.count(ei)) continue;
    Rational covered = idx.load(d, ei);
    if (covered != d.edge(ei).cost)
      return OptimalityViolation{NonTightEdge{d.edge(ei).id, d.edge(ei).cost, covered}};
  }

  for (std::size_t i = 0; i < idx.sets.size(); ++i) {
    int deg = 0;
    for (int ei : arb)
      if (idx.sets[i].count(d.edge_head(ei)) && !idx.sets[i].count(d.edge_tail(ei))) ++deg;
    if (deg != 1) return OptimalityViolation{OverEnteredSet{y.support[i].first, deg}};
  }
  return std::nullopt;
}

ForcedContraction contract_forced_edge(const WeightedDigraph& d, const std::string& edge_id) {
  const int ei = d.edge_index(edge_id);
  const DigraphEdge forced = d.edge(ei);
  if (forced.head == d.root()) throw input_error("cannot force an edge into the root");

  std::vector<std::string> nodes;
  for (int v = 0; v < d.node_count(); ++v)
    if (d.node(v) != forced.head) nodes.push_back(d.node(v));

  std::vector<DigraphEdge> edges;
  std::vector<std::string> surviving;
  for (int k = 0; k < d.edge_count(); ++k) {
    if (k == ei) continue;
    DigraphEdge e = d.edge(k);
    if (e.head == forced.head) continue; // competing entries into the merged node
    if (e.tail == forced.head) e.tail = forced.tail;
    if (e.tail == e.head) continue; // collapsed into a loop
    surviving.push_back(e.id);
    edges.push_back(std::move(e));
  }
  return {WeightedDigraph(std::move(nodes), std::move(edges), d.root()), forced.tail,
          std::move(surviving), forced.cost};
}

WeightSpectrum arborescence_cost_spectrum(const WeightedDigraph& d,
                                          const EnumerationBudget& budget) {
  std::vector<EdgeIndexSet> arbs = enumerate_arborescences(d, budget);
  if (arbs.empty())
    throw not_applicable_error("no arborescence: some nodes are unreachable from the root");
  std::set<Rational> distinct;
  for (const EdgeIndexSet& a : arbs) distinct.insert(edge_set_cost(d, a));
  return {std::vector<Rational>(distinct.begin(), distinct.end())};
}

std::pair<std::string, std::string> forcing_pair_for_second_smallest(
    const WeightedDigraph& d, const EnumerationBudget& budget) {
  std::vector<EdgeIndexSet> arbs = enumerate_arborescences(d, budget);
  if (arbs.empty())
    throw not_applicable_error("no arborescence: some nodes are unreachable from the root");
  std::vector<Rational> costs;
  std::set<Rational> distinct;
  for (const EdgeIndexSet& a : arbs) {
    costs.push_back(edge_set_cost(d, a));
    distinct.insert(costs.back());
  }
  if (distinct.size() < 2) throw not_applicable_error("every arborescence has the same cost");
  const Rational x2 = *std::next(distinct.begin(), 1);

  EdgeIndexSet target;
  for (std::size_t i = 0; i < arbs.size(); ++i)
    if (costs[i] == x2) {
      target = arbs[i];
      break;
    }

  OptimalArborescence opt = min_cost_arborescence_with_dual(d);
  auto [e, f] = extract_pair(d, target, opt.dual);

  if (constrained_minimum(d, arbs, {d.edge(e).id, d.edge(f).id}) != x2)
    throw alarm_error("forcing pair failed the enumeration re-check");
  return {d.edge(e).id, d.edge(f).id};
}

ArbForcingCertificate lth_smallest_arborescence_forcing_set(const WeightedDigraph& d, int level,
                                                            const EnumerationBudget& budget) {
  if (level < 1) throw input_error("level must be at least 1");
  std::vector<EdgeIndexSet> arbs = enumerate_arborescences(d, budget);
  if (arbs.empty())
    throw not_applicable_error("no arborescence: some nodes are unreachable from the root");
  std::set<Rational> distinct;
  for (const EdgeIndexSet& a : arbs) distinct.insert(edge_set_cost(d, a));
  if (level > static_cast<int>(distinct.size()))
    throw not_applicable_error("level exceeds the number of distinct costs");
  const Rational x = *std::next(distinct.begin(), level - 1);
  const int bound = 2 * (level - 1);

  std::vector<std::string> p = forcing_rec(d, level, budget);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());

  if (static_cast<int>(p.size()) > bound)
    throw alarm_error("forcing set exceeds the guaranteed size bound");
  if (constrained_minimum(d, arbs, p) != x)
    throw alarm_error("forcing set does not pin the target cost");
  return {std::move(p), level, x, bound};
}

} // namespace mcg
