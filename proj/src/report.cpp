#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arborescence.hpp"
#include "constructions.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "kbest.hpp"
#include "oracle.hpp"
#include "symmetry.hpp"

namespace mcg {

namespace {

using nlohmann::json; // std::map keys, so dumps are canonically sorted

// Each cross-check is recorded by name; a failed one aborts the whole
// report, because at this layer every check is a guarantee, not a warning.
struct CheckLog {
  std::vector<std::pair<std::string, bool>> entries;
  void require(const std::string& name, bool ok) {
    entries.emplace_back(name, ok);
    if (!ok) throw alarm_error("cross-check failed: " + name);
  }
  json to_json() const {
    json arr = json::array();
    for (const auto& [name, pass] : entries) arr.push_back(json{{"name", name}, {"pass", pass}});
    return arr;
  }
};

EnumerationBudget apply_params(EnumerationBudget base, const AnalysisParams& p) {
  if (p.budget_nodes > 0) base.max_nodes = p.budget_nodes;
  base.max_items = p.max_items;
  base.seed = p.seed;
  return base;
}

json rat(const Rational& value) { return rational_to_string(value); }

json rat_list(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(rat(v));
  return arr;
}

// Edge id sequences keep the caller's order (walks stay in walk order,
// canonical sets stay id-sorted).
json id_seq(const WeightedGraph& g, const std::vector<int>& edges) {
  return json(edge_ids(g, edges));
}

std::vector<std::string> arc_ids(const WeightedDigraph& d, const EdgeIndexSet& edges) {
  std::vector<std::string> out;
  out.reserve(edges.size());
  for (int e : edges) out.push_back(d.edge(e).id);
  return out;
}

json potential_json(const NodePotential& f) {
  json obj = json::object();
  for (const auto& [node, value] : f.values) obj[node] = rat(value);
  return obj;
}

json obstruction_json(const PotentialObstruction& y) {
  json obj = json::object();
  for (const auto& [edge, value] : y.edge_coefficients) obj[edge] = rat(value);
  return json{{"edge_coefficients", obj}, {"weighted_sum", rat(y.weighted_sum)}};
}

bool potential_induces_weights(const WeightedGraph& g, const NodePotential& f) {
  for (const GraphEdge& e : g.edges()) {
    auto fu = f.values.find(e.u), fv = f.values.find(e.v);
    if (fu == f.values.end() || fv == f.values.end()) return false;
    if (fu->second + fv->second != e.weight) return false;
  }
  return true;
}

bool obstruction_is_valid(const WeightedGraph& g, const PotentialObstruction& y) {
  // zero incidence sum at every node, nonzero weighted sum
  std::map<std::string, Rational> node_sum;
  Rational weighted = 0;
  for (const auto& [edge_id, coeff] : y.edge_coefficients) {
    const GraphEdge& e = g.edge(g.edge_index(edge_id));
    node_sum[e.u] += coeff;
    node_sum[e.v] += coeff;
    weighted += coeff * e.weight;
  }
  for (const auto& [node, total] : node_sum)
    if (total != 0) return false;
  return weighted != 0 && weighted == y.weighted_sum;
}

Rational nu_dot_weights(const WeightedGraph& g, const AlternatingCycle& cycle) {
  Rational total = 0;
  for (const auto& [edge, sign] : cycle.nu) total += Rational(sign) * g.edge(edge).weight;
  return total;
}

void expect_graph(const Instance& instance, const std::string& command) {
  if (!instance.is_graph())
    throw input_error(command + " needs an undirected graph instance");
}

void expect_digraph(const Instance& instance, const std::string& command) {
  if (instance.is_graph())
    throw input_error(command + " needs a rooted digraph instance");
}

std::map<std::string, long> demand_or_ones(const Instance& instance) {
  if (instance.b) return *instance.b;
  std::map<std::string, long> ones;
  for (const std::string& v : instance.graph().nodes()) ones[v] = 1;
  return ones;
}

json payload_check(const WeightedGraph& g, const AnalysisParams& p, CheckLog& checks) {
  EnumerationBudget budget = apply_params(matching_budget(), p);
  PropertyReport r = property_report(g, budget);

  json verdicts{{"node_induced", verdict_name(r.node_induced)},
                {"even_walk", verdict_name(r.even_walk)},
                {"even_cycle", verdict_name(r.even_cycle)},
                {"matching_equality", verdict_name(r.matching_equality)},
                {"edge_minmax", verdict_name(r.edge_minmax)}};

  json witnesses = json::object();
  if (r.potential) {
    witnesses["potential"] = potential_json(*r.potential);
    checks.require("potential induces every edge weight", potential_induces_weights(g, *r.potential));
  }
  if (r.obstruction) {
    witnesses["obstruction"] = obstruction_json(*r.obstruction);
    checks.require("obstruction has zero node sums and nonzero value",
                   obstruction_is_valid(g, *r.obstruction));
  }
  if (r.walk_witness) {
    witnesses["unbalanced_walk"] = json{{"edges", id_seq(g, r.walk_witness->edge_sequence)},
                                        {"alternating_sum", rat(r.walk_witness->alternating_sum)}};
    bool ok = is_closed_walk(g, r.walk_witness->edge_sequence) &&
              r.walk_witness->edge_sequence.size() % 2 == 0 &&
              alternating_weight(g, r.walk_witness->edge_sequence) == r.walk_witness->alternating_sum &&
              r.walk_witness->alternating_sum != 0;
    checks.require("walk witness is a closed even walk with nonzero alternating sum", ok);
  }
  if (r.cycle_witness) {
    json nu = json::array();
    for (const auto& [edge, sign] : r.cycle_witness->cycle.nu)
      nu.push_back(json{{"edge", g.edge(edge).id}, {"coefficient", sign}});
    witnesses["unbalanced_cycle"] = json{{"edges", id_seq(g, r.cycle_witness->cycle.edge_sequence)},
                                         {"nu", nu},
                                         {"imbalance", rat(r.cycle_witness->imbalance)}};
    bool ok = is_simple_cycle(g, r.cycle_witness->cycle.edge_sequence) &&
              r.cycle_witness->cycle.edge_sequence.size() % 2 == 0 &&
              nu_dot_weights(g, r.cycle_witness->cycle) == r.cycle_witness->imbalance &&
              r.cycle_witness->imbalance != 0;
    checks.require("cycle witness is even with nonzero weighted nu sum", ok);
  }
  if (r.common_weight) witnesses["common_matching_weight"] = rat(*r.common_weight);
  if (r.matching_witness) {
    witnesses["unequal_matchings"] =
        json{{"lighter", id_seq(g, r.matching_witness->lighter)},
             {"lighter_weight", rat(r.matching_witness->lighter_weight)},
             {"heavier", id_seq(g, r.matching_witness->heavier)},
             {"heavier_weight", rat(r.matching_witness->heavier_weight)}};
    bool ok = is_perfect_matching(g, r.matching_witness->lighter) &&
              is_perfect_matching(g, r.matching_witness->heavier) &&
              edge_set_weight(g, r.matching_witness->lighter) == r.matching_witness->lighter_weight &&
              edge_set_weight(g, r.matching_witness->heavier) == r.matching_witness->heavier_weight &&
              r.matching_witness->lighter_weight < r.matching_witness->heavier_weight;
    checks.require("matching pair witness consists of matchings of unequal weight", ok);
  }
  if (r.edge_witness) {
    witnesses["stuck_edge"] = json{{"edge", g.edge(r.edge_witness->edge).id},
                                   {"side", r.edge_witness->min_side ? "min" : "max"},
                                   {"edge_extreme", rat(r.edge_witness->edge_extreme)},
                                   {"global_extreme", rat(r.edge_witness->global_extreme)}};
    // recompute both extremes from scratch
    std::optional<Rational> global_min, global_max, through_min, through_max;
    for (const EdgeIndexSet& m : enumerate_perfect_matchings(g, budget)) {
      Rational w = edge_set_weight(g, m);
      if (!global_min || w < *global_min) global_min = w;
      if (!global_max || w > *global_max) global_max = w;
      if (std::binary_search(m.begin(), m.end(), r.edge_witness->edge,
                             [&](int a, int b) { return edge_id_less(g, a, b); })) {
        if (!through_min || w < *through_min) through_min = w;
        if (!through_max || w > *through_max) through_max = w;
      }
    }
    bool ok = global_min && through_min;
    if (ok) {
      if (r.edge_witness->min_side)
        ok = *through_min == r.edge_witness->edge_extreme &&
             *global_min == r.edge_witness->global_extreme && *through_min > *global_min;
      else
        ok = *through_max == r.edge_witness->edge_extreme &&
             *global_max == r.edge_witness->global_extreme && *through_max < *global_max;
    }
    checks.require("stuck edge misses the recomputed global extreme", ok);
  }

  // the two potential routes and the two cycle routes must agree; sampled
  // even walks can never contradict a positive walk verdict
  bool alg_has = std::holds_alternative<NodePotential>(check_node_induced(g));
  bool walk_has = std::holds_alternative<NodePotential>(reconstruct_potential_by_walks(g));
  checks.require("walk reconstruction agrees with the algebraic route", alg_has == walk_has);
  bool cycle_clean = !check_even_cycle_symmetry(g, budget).has_value();
  checks.require("cycle verdict agrees with the basis computation",
                 cycle_clean == even_cycle_symmetry_by_basis(g, budget));
  if (r.even_walk == Verdict::yes) {
    bool balanced = true;
    for (const ClosedWalk& w : sample_even_closed_walks(g, p.walk_count, p.walk_max_len, p.seed))
      if (alternating_weight(g, w.edge_sequence) != 0) balanced = false;
    checks.require("sampled even walks all balance under a yes verdict", balanced);
  }
  if (r.matching_covered) {
    auto rank = [](Verdict v) { return v == Verdict::yes ? 1 : 0; };
    bool monotone = rank(r.node_induced) <= rank(r.even_walk) &&
                    rank(r.even_walk) <= rank(r.even_cycle) &&
                    rank(r.even_cycle) <= rank(r.matching_equality) &&
                    rank(r.matching_equality) <= rank(r.edge_minmax);
    checks.require("verdict vector is monotone on matching-covered input", monotone);
  }

  return json{{"matching_covered", r.matching_covered},
              {"verdicts", verdicts},
              {"witnesses", witnesses}};
}

json payload_potential(const WeightedGraph& g, CheckLog& checks) {
  NodeInducedResult alg = check_node_induced(g);
  WalkPotentialResult walk = reconstruct_potential_by_walks(g);
  bool alg_has = std::holds_alternative<NodePotential>(alg);
  bool walk_has = std::holds_alternative<NodePotential>(walk);
  checks.require("the two routes agree on existence", alg_has == walk_has);

  json payload{{"admits_potential", alg_has}};
  if (alg_has) {
    const NodePotential& fw = std::get<NodePotential>(walk);
    const NodePotential& fa = std::get<NodePotential>(alg);
    payload["potential"] = potential_json(fw);
    payload["algebraic_potential"] = potential_json(fa);
    checks.require("walk potential induces every edge weight", potential_induces_weights(g, fw));
    checks.require("algebraic potential induces every edge weight", potential_induces_weights(g, fa));
  } else {
    const PotentialObstruction& y = std::get<PotentialObstruction>(alg);
    const UnbalancedWalk& uw = std::get<UnbalancedWalk>(walk);
    payload["obstruction"] = obstruction_json(y);
    payload["unbalanced_walk"] = json{{"edges", id_seq(g, uw.edge_sequence)},
                                      {"alternating_sum", rat(uw.alternating_sum)}};
    checks.require("obstruction has zero node sums and nonzero value", obstruction_is_valid(g, y));
    checks.require("walk witness is a closed even walk with nonzero alternating sum",
                   is_closed_walk(g, uw.edge_sequence) && uw.edge_sequence.size() % 2 == 0 &&
                       alternating_weight(g, uw.edge_sequence) == uw.alternating_sum &&
                       uw.alternating_sum != 0);
  }
  return payload;
}

json payload_spaces(const WeightedGraph& g, const AnalysisParams& p, CheckLog& checks) {
  EnumerationBudget budget = apply_params(matching_budget(), p);
  SpaceDimensions s = space_dimensions(g, budget);
  json payload{{"dim_node_induced", s.dim_node_induced},
               {"dim_cycle_space", s.dim_cycle_space},
               {"bipartite_components", s.bipartite_components},
               {"formula_node_induced", s.formula_node_induced},
               {"rank_identity", s.rank_identity},
               {"at_most_one_nonbipartite_block", s.at_most_one_nonbipartite_block}};
  if (s.dim_matching_span) payload["dim_matching_span"] = *s.dim_matching_span;
  if (s.dim_matching_equality) payload["dim_matching_equality"] = *s.dim_matching_equality;
  if (s.brick_count) payload["brick_count"] = *s.brick_count;
  if (s.formula_matching_span) payload["formula_matching_span"] = *s.formula_matching_span;
  if (s.formula_matching_equality) payload["formula_matching_equality"] = *s.formula_matching_equality;

  checks.require("incidence rank matches the component count formula",
                 s.dim_node_induced == s.formula_node_induced);
  checks.require("rank identity matches the block condition",
                 s.rank_identity == s.at_most_one_nonbipartite_block);
  if (s.brick_count) {
    checks.require("matching span rank matches the brick count formula",
                   s.dim_matching_span == s.formula_matching_span);
    checks.require("matching equality dimension matches the brick count formula",
                   s.dim_matching_equality == s.formula_matching_equality);
  }
  return payload;
}

json payload_blocks(const WeightedGraph& g, CheckLog& checks) {
  BlockDecomposition b = block_decomposition(g);
  json blocks = json::array();
  std::vector<int> edge_cover(g.edge_count(), 0);
  for (const Block& blk : b.blocks) {
    blocks.push_back(json{{"nodes", node_ids(g, blk.node_indices)},
                          {"edges", id_seq(g, blk.edge_indices)},
                          {"bipartite", blk.bipartite}});
    for (int e : blk.edge_indices) ++edge_cover[e];
  }
  json tree = json::array();
  for (const auto& [block_ix, cut_node] : b.tree_edges)
    tree.push_back(json{{"block", block_ix}, {"cut_node", cut_node}});

  bool partition = std::all_of(edge_cover.begin(), edge_cover.end(), [](int c) { return c == 1; });
  checks.require("blocks partition the edge set", partition);
  int nonbip = 0;
  for (const Block& blk : b.blocks)
    if (!blk.bipartite) ++nonbip;
  checks.require("non-bipartite block count matches", nonbip == b.nonbipartite_count);

  return json{{"blocks", blocks},
              {"cut_nodes", b.cut_nodes},
              {"tree", tree},
              {"nonbipartite_count", b.nonbipartite_count}};
}

json tight_cut_node_json(const TightCutNode& node) {
  json j{{"nodes", node.graph.nodes()}};
  std::vector<std::string> ids;
  for (const GraphEdge& e : node.graph.edges()) ids.push_back(e.id);
  j["edges"] = ids;
  if (node.is_leaf()) {
    j["kind"] = node.leaf_brick ? "brick" : "brace";
  } else {
    j["shore"] = *node.shore;
    j["split"] = json::array({tight_cut_node_json(*node.contract_shore_child),
                              tight_cut_node_json(*node.contract_complement_child)});
  }
  return j;
}

void collect_leaves(const TightCutNode& node, const EnumerationBudget& budget, bool& cuts_clean,
                    bool& kinds_clean) {
  if (node.is_leaf()) {
    if (!enumerate_tight_cuts(node.graph, budget).empty()) cuts_clean = false;
    bool bip = std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(node.graph));
    if (bip == node.leaf_brick) kinds_clean = false;
    return;
  }
  collect_leaves(*node.contract_shore_child, budget, cuts_clean, kinds_clean);
  collect_leaves(*node.contract_complement_child, budget, cuts_clean, kinds_clean);
}

json payload_decompose(const WeightedGraph& g, const AnalysisParams& p, CheckLog& checks) {
  EnumerationBudget budget = apply_params(tight_cut_budget(), p);
  TightCutTree tree = tight_cut_decomposition(g, budget);

  json leaves = json::array();
  for (const LeafSignature& leaf : tree.leaves)
    leaves.push_back(json{{"kind", leaf.brick ? "brick" : "brace"},
                          {"nodes", leaf.nodes},
                          {"edges", leaf.edges}});

  checks.require("leaf counts add up",
                 tree.bricks + tree.braces == static_cast<int>(tree.leaves.size()));
  bool cuts_clean = true, kinds_clean = true;
  collect_leaves(*tree.root, budget, cuts_clean, kinds_clean);
  checks.require("no leaf has a nontrivial tight cut", cuts_clean);
  checks.require("leaf kinds match bipartiteness", kinds_clean);

  return json{{"tree", tight_cut_node_json(*tree.root)},
              {"bricks", tree.bricks},
              {"braces", tree.braces},
              {"leaves", leaves}};
}

json payload_kbest_pm(const WeightedGraph& g, const AnalysisParams& p, CheckLog& checks) {
  EnumerationBudget budget = apply_params(matching_budget(), p);
  ForcingCertificate cert = lth_smallest_pm_forcing_set(g, p.ell, budget);
  WeightSpectrum spectrum = pm_weight_spectrum(g, budget);

  checks.require("certificate size stays within the bound",
                 static_cast<int>(cert.forced.size() + cert.forbidden.size()) <= cert.bound);
  checks.require("achieved weight sits at the requested level",
                 cert.achieved == spectrum.values[cert.level - 1]);
  auto re = min_weight_pm_constrained(g, cert.forced, cert.forbidden, budget);
  checks.require("constrained minimum equals the achieved weight",
                 re.has_value() && re->weight == cert.achieved);

  return json{{"level", cert.level},
              {"spectrum", rat_list(spectrum.values)},
              {"forced", id_seq(g, cert.forced)},
              {"forbidden", id_seq(g, cert.forbidden)},
              {"achieved", rat(cert.achieved)},
              {"bound", cert.bound},
              {"size", cert.forced.size() + cert.forbidden.size()}};
}

json payload_kbest_bfactor(const Instance& instance, const AnalysisParams& p, CheckLog& checks) {
  const WeightedGraph& g = instance.graph();
  EnumerationBudget budget = apply_params(matching_budget(), p);
  std::map<std::string, long> demand = demand_or_ones(instance);
  BFactorCertificate cert = lth_smallest_bfactor(g, demand, p.ell, budget);
  WeightSpectrum spectrum = bfactor_weight_spectrum(g, demand, budget);
  GadgetMap gm = bfactor_gadget(g, demand);

  checks.require("certificate size stays within the bound",
                 static_cast<int>(cert.forced.size() + cert.forbidden.size()) <= cert.bound);
  checks.require("achieved weight sits at the requested level",
                 cert.achieved == spectrum.values[cert.level - 1]);
  // direct enumeration under the mapped constraints
  std::optional<Rational> best;
  for (const EdgeIndexSet& sel : enumerate_b_factors(g, demand, budget)) {
    bool ok = true;
    for (int e : cert.forced)
      if (!std::binary_search(sel.begin(), sel.end(), e,
                              [&](int a, int b) { return edge_id_less(g, a, b); }))
        ok = false;
    for (int e : cert.forbidden)
      if (std::binary_search(sel.begin(), sel.end(), e,
                             [&](int a, int b) { return edge_id_less(g, a, b); }))
        ok = false;
    if (!ok) continue;
    Rational w = edge_set_weight(g, sel);
    if (!best || w < *best) best = w;
  }
  checks.require("constrained minimum equals the achieved weight",
                 best.has_value() && *best == cert.achieved);

  json demand_json = json::object();
  for (const auto& [node, value] : demand) demand_json[node] = value;
  return json{{"level", cert.level},
              {"spectrum", rat_list(spectrum.values)},
              {"forced", id_seq(g, cert.forced)},
              {"forbidden", id_seq(g, cert.forbidden)},
              {"achieved", rat(cert.achieved)},
              {"bound", cert.bound},
              {"size", cert.forced.size() + cert.forbidden.size()},
              {"demand", demand_json},
              {"gadget", json{{"nodes", gm.derived.node_count()},
                              {"edges", gm.derived.edge_count()},
                              {"bipartite", gm.bipartite}}}};
}

json payload_kbest_arb(const WeightedDigraph& d, const AnalysisParams& p, CheckLog& checks) {
  EnumerationBudget budget = apply_params(arborescence_budget(), p);
  ArbForcingCertificate cert = lth_smallest_arborescence_forcing_set(d, p.ell, budget);
  WeightSpectrum spectrum = arborescence_cost_spectrum(d, budget);

  checks.require("certificate size stays within the bound",
                 static_cast<int>(cert.forced.size()) <= cert.bound);
  checks.require("achieved cost sits at the requested level",
                 cert.achieved == spectrum.values[cert.level - 1]);
  std::optional<Rational> best;
  for (const EdgeIndexSet& arb : enumerate_arborescences(d, budget)) {
    std::set<std::string> ids;
    for (int e : arb) ids.insert(d.edge(e).id);
    bool contains_all = std::all_of(cert.forced.begin(), cert.forced.end(),
                                    [&](const std::string& id) { return ids.count(id) > 0; });
    if (!contains_all) continue;
    Rational c = edge_set_cost(d, arb);
    if (!best || c < *best) best = c;
  }
  checks.require("constrained minimum equals the achieved cost",
                 best.has_value() && *best == cert.achieved);

  return json{{"level", cert.level},
              {"spectrum", rat_list(spectrum.values)},
              {"forced", cert.forced},
              {"achieved", rat(cert.achieved)},
              {"bound", cert.bound},
              {"size", cert.forced.size()}};
}

json payload_arb_dual(const WeightedDigraph& d, CheckLog& checks) {
  OptimalArborescence opt = min_cost_arborescence_with_dual(d);

  json support = json::array();
  Rational total = 0;
  for (const auto& [set, value] : opt.dual.support) {
    support.push_back(json{{"set", set}, {"value", rat(value)}});
    total += value;
  }

  checks.require("dual support is laminar", is_laminar(opt.dual));
  checks.require("dual total equals the primal cost", total == opt.cost);
  checks.require("the optimality conditions hold",
                 !verify_optimality_conditions(d, opt.arborescence, opt.dual).has_value());
  checks.require("tree cost re-adds to the stated value",
                 edge_set_cost(d, opt.arborescence) == opt.cost);

  return json{{"arborescence", arc_ids(d, opt.arborescence)},
              {"cost", rat(opt.cost)},
              {"dual", support},
              {"dual_total", rat(total)}};
}

json payload_oracle(const Instance& instance, const AnalysisParams& p, CheckLog& checks) {
  const std::string& which = p.oracle_which;
  json payload{{"which", which}};

  if (which == "pm") {
    expect_graph(instance, "oracle pm");
    const WeightedGraph& g = instance.graph();
    EnumerationBudget budget = apply_params(matching_budget(), p);
    json items = json::array();
    bool valid = true;
    for (const EdgeIndexSet& m : enumerate_perfect_matchings(g, budget)) {
      if (!is_perfect_matching(g, m)) valid = false;
      items.push_back(json{{"edges", id_seq(g, m)}, {"weight", rat(edge_set_weight(g, m))}});
    }
    checks.require("every listed set is a perfect matching", valid);
    payload["matchings"] = items;
    payload["count"] = items.size();
  } else if (which == "cycles") {
    expect_graph(instance, "oracle cycles");
    const WeightedGraph& g = instance.graph();
    EnumerationBudget budget = apply_params(matching_budget(), p);
    json items = json::array();
    bool valid = true;
    for (const AlternatingCycle& c : enumerate_even_cycles(g, budget)) {
      if (!is_simple_cycle(g, c.edge_sequence) || c.edge_sequence.size() % 2 != 0) valid = false;
      json nu = json::array();
      for (const auto& [edge, sign] : c.nu)
        nu.push_back(json{{"edge", g.edge(edge).id}, {"coefficient", sign}});
      items.push_back(json{{"edges", id_seq(g, c.edge_sequence)}, {"nu", nu}});
    }
    checks.require("every listed cycle is simple and even", valid);
    payload["cycles"] = items;
    payload["count"] = items.size();
  } else if (which == "bfactors") {
    expect_graph(instance, "oracle bfactors");
    const WeightedGraph& g = instance.graph();
    EnumerationBudget budget = apply_params(matching_budget(), p);
    std::map<std::string, long> demand = demand_or_ones(instance);
    json items = json::array();
    bool valid = true;
    for (const EdgeIndexSet& s : enumerate_b_factors(g, demand, budget)) {
      if (!is_b_factor(g, demand, s)) valid = false;
      items.push_back(json{{"edges", id_seq(g, s)}, {"weight", rat(edge_set_weight(g, s))}});
    }
    checks.require("every listed set meets the demand map", valid);
    json demand_json = json::object();
    for (const auto& [node, value] : demand) demand_json[node] = value;
    payload["demand"] = demand_json;
    payload["selections"] = items;
    payload["count"] = items.size();
  } else if (which == "arborescences") {
    expect_digraph(instance, "oracle arborescences");
    const WeightedDigraph& d = instance.digraph();
    EnumerationBudget budget = apply_params(arborescence_budget(), p);
    json items = json::array();
    bool valid = true;
    for (const EdgeIndexSet& a : enumerate_arborescences(d, budget)) {
      if (!is_arborescence(d, a)) valid = false;
      items.push_back(json{{"edges", arc_ids(d, a)}, {"cost", rat(edge_set_cost(d, a))}});
    }
    checks.require("every listed set is an arborescence", valid);
    payload["arborescences"] = items;
    payload["count"] = items.size();
  } else if (which == "tightcuts") {
    expect_graph(instance, "oracle tightcuts");
    const WeightedGraph& g = instance.graph();
    EnumerationBudget budget = apply_params(tight_cut_budget(), p);
    std::vector<std::vector<int>> cuts = enumerate_tight_cuts(g, budget);
    std::vector<EdgeIndexSet> matchings =
        enumerate_perfect_matchings(g, apply_params(matching_budget(), p));
    json items = json::array();
    bool tight = true;
    for (const std::vector<int>& shore : cuts) {
      std::vector<char> in_shore(g.node_count(), 0);
      for (int v : shore) in_shore[v] = 1;
      for (const EdgeIndexSet& m : matchings) {
        int crossing = 0;
        for (int e : m)
          if (in_shore[g.edge_u(e)] != in_shore[g.edge_v(e)]) ++crossing;
        if (crossing != 1) tight = false;
      }
      items.push_back(json{{"shore", node_ids(g, shore)}});
    }
    checks.require("every perfect matching crosses each cut exactly once", tight);
    payload["cuts"] = items;
    payload["count"] = items.size();
  } else if (which == "walks") {
    expect_graph(instance, "oracle walks");
    const WeightedGraph& g = instance.graph();
    json items = json::array();
    bool valid = true;
    for (const ClosedWalk& w : sample_even_closed_walks(g, p.walk_count, p.walk_max_len, p.seed)) {
      if (!is_closed_walk(g, w.edge_sequence) || w.edge_sequence.size() % 2 != 0) valid = false;
      items.push_back(json{{"start", g.node(w.start_node)},
                           {"edges", id_seq(g, w.edge_sequence)},
                           {"alternating_weight", rat(alternating_weight(g, w.edge_sequence))}});
    }
    checks.require("every sampled walk is closed with even length", valid);
    payload["walks"] = items;
    payload["count"] = items.size();
  } else {
    throw input_error("unknown oracle name: " + which);
  }
  return payload;
}

void render_node(const json& node, int indent, std::string& out);

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_node(const json& node, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (is_scalar(value)) {
        out += pad + key + ": " + scalar_text(value) + "\n";
      } else if (value.empty()) {
        out += pad + key + ": " + (value.is_array() ? "[]" : "{}") + "\n";
      } else {
        out += pad + key + ":\n";
        render_node(value, indent + 2, out);
      }
    }
    return;
  }
  if (node.is_array()) {
    bool flat = std::all_of(node.begin(), node.end(), [](const json& v) { return is_scalar(v); });
    if (flat) {
      std::string line = pad + "[";
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i) line += ", ";
        line += scalar_text(node[i]);
      }
      out += line + "]\n";
      return;
    }
    for (const json& item : node) {
      out += pad + "-\n";
      render_node(item, indent + 2, out);
    }
    return;
  }
  out += pad + scalar_text(node) + "\n";
}

} // namespace

std::string instance_digest(const Instance& instance) {
  const std::string bytes = serialize_instance(instance);
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string run_analysis(const Instance& instance, const std::string& command,
                         const AnalysisParams& params) {
  CheckLog checks;
  json payload;

  if (command == "check") {
    expect_graph(instance, "check");
    payload = payload_check(instance.graph(), params, checks);
  } else if (command == "potential") {
    expect_graph(instance, "potential");
    payload = payload_potential(instance.graph(), checks);
  } else if (command == "spaces") {
    expect_graph(instance, "spaces");
    payload = payload_spaces(instance.graph(), params, checks);
  } else if (command == "blocks") {
    expect_graph(instance, "blocks");
    payload = payload_blocks(instance.graph(), checks);
  } else if (command == "decompose") {
    expect_graph(instance, "decompose");
    payload = payload_decompose(instance.graph(), params, checks);
  } else if (command == "kbest-pm") {
    expect_graph(instance, "kbest-pm");
    payload = payload_kbest_pm(instance.graph(), params, checks);
  } else if (command == "kbest-bfactor") {
    expect_graph(instance, "kbest-bfactor");
    payload = payload_kbest_bfactor(instance, params, checks);
  } else if (command == "kbest-arb") {
    expect_digraph(instance, "kbest-arb");
    payload = payload_kbest_arb(instance.digraph(), params, checks);
  } else if (command == "arb-dual") {
    expect_digraph(instance, "arb-dual");
    payload = payload_arb_dual(instance.digraph(), checks);
  } else if (command == "oracle") {
    payload = payload_oracle(instance, params, checks);
  } else {
    throw input_error("unknown command: " + command);
  }

  json report{{"command", command},
              {"digest", instance_digest(instance)},
              {"payload", payload},
              {"oracle_checks", checks.to_json()}};
  return report.dump(2) + "\n";
}

std::string run_construct(const std::string& name) {
  return serialize_instance(catalog(name).instance);
}

std::string render_text(const std::string& report_json) {
  json parsed = json::parse(report_json);
  std::string out;
  render_node(parsed, 0, out);
  return out;
}

} // namespace mcg
