#include <algorithm>

#include "checks.h"
#include "tokgraph/combinatorics.h"
#include "tokgraph/errors.h"
#include "tokgraph/graph_io.h"

namespace tokgraph::harness {

namespace detail {

int measure(const Graph& g, const std::string& invariant, const Budget& budget) {
  if (invariant == "components") return static_cast<int>(connected_components(g).size());
  if (invariant == "isolated") {
    int c = 0;
    for (int v = 0; v < g.order(); ++v) c += g.degree(v) == 0;
    return c;
  }
  if (invariant == "bipartite") return bipartiteness(g).bipartite ? 1 : 0;
  if (invariant == "alpha") return independence_number(g, budget).value;
  if (invariant == "omega") return clique_number(g, budget).value;
  if (invariant == "chi") return chromatic_number(g, budget).value;
  if (invariant == "gamma") return domination_number(g, budget).value;
  if (invariant == "idom") return independent_domination_number(g, budget).value;
  throw ParameterError("invariant", "unknown invariant '" + invariant + "'");
}

Json config_json(const TokenConfig& c) { return Json(c); }

bool is_path_union(const Graph& g) {
  if (g.max_degree() > 2) return false;
  const int components = static_cast<int>(connected_components(g).size());
  return g.size() == g.order() - components;
}

Json invariant_witness(const Graph& g, const std::string& invariant, int value, const std::string& op,
                       const Json& rhs, const std::string& explanation, Construction c) {
  Json w = {{"kind", "invariant"},
            {"graph6", graph6_encode(g)},
            {"invariant", invariant},
            {"value", value},
            {"claim", {{"op", op}, {"rhs", rhs}}},
            {"explanation", explanation}};
  if (c.host) w["construction"] = {{"host_graph6", graph6_encode(*c.host)}, {"k", c.k}, {"m", c.m}};
  return w;
}

Json not_isomorphic_witness(const Graph& a, const Graph& b, const std::string& explanation) {
  return {{"kind", "not_isomorphic"},
          {"graph6", graph6_encode(a)},
          {"other_graph6", graph6_encode(b)},
          {"explanation", explanation}};
}

Json group_order_witness(const Graph& g, const BigInt& order, const BigInt& formula,
                         const std::string& explanation) {
  return {{"kind", "group_order"},
          {"graph6", graph6_encode(g)},
          {"order", to_decimal(order)},
          {"formula", to_decimal(formula)},
          {"explanation", explanation}};
}

Json edge_sets_differ_witness(const Graph& host, const TokenConfig& a, const TokenConfig& b,
                              const std::string& explanation) {
  const bool in_f22 = config_adjacent(host, a, b, 2);
  const bool in_f2c = !config_adjacent(host, a, b, 1);
  return {{"kind", "edge_sets_differ"},
          {"graph6", graph6_encode(host)},
          {"pair", {config_json(a), config_json(b)}},
          {"in_f22", in_f22},
          {"in_f2_complement", in_f2c},
          {"explanation", explanation}};
}

Json edge_conflict_witness(const CycleColoring& coloring, const ColoringValidation& validation,
                           const std::string& explanation) {
  Json conflicts = Json::array();
  for (const auto& [a, b] : validation.conflicts) conflicts.push_back({config_json(a), config_json(b)});
  const Graph t = build_token_graph(cycle_graph(coloring.n), 2, 2).graph;
  return {{"kind", "edge_conflict"},
          {"graph6", graph6_encode(t)},
          {"n", coloring.n},
          {"variant", coloring.variant == CycleColoringVariant::kC ? "c" : "c_prime"},
          {"conflicts", conflicts},
          {"explanation", explanation}};
}

}  // namespace detail

Json to_json(const CheckResult& r) {
  return {{"name", r.name},
          {"params", r.params},
          {"status", status_name(r.status)},
          {"expected", r.expected},
          {"actual", r.actual},
          {"witness", r.witness},
          {"runtime_ms", r.runtime_ms}};
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& r : report.checks) checks.push_back(to_json(r));
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"version", version()},
          {"caps",
           {{"max_n", report.caps.max_n},
            {"timeout_ms", report.caps.timeout_ms},
            {"max_nodes", report.caps.max_nodes},
            {"include_slow", report.caps.include_slow}}},
          {"checks", std::move(checks)},
          {"summary",
           {{"pass", report.count(Status::kPass)},
            {"fail", report.count(Status::kFail)},
            {"discrepancy", report.count(Status::kDiscrepancy)},
            {"skipped", report.count(Status::kSkipped)},
            {"budget_exceeded", report.count(Status::kBudgetExceeded)}}}};
}

namespace {

bool reject(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool claim_violated(int value, const Json& claim) {
  const std::string op = claim.at("op");
  const double rhs = claim.at("rhs").get<double>();
  if (op == "==") return value != rhs;
  if (op == "!=") return value == rhs;
  throw ParameterError("claim.op", "unknown operator '" + op + "'");
}

TokenConfig config_from(const Json& j) { return j.get<TokenConfig>(); }

}  // namespace

bool revalidate_witness(const Json& witness, std::string* why) {
  try {
    if (!witness.is_object() || !witness.contains("kind")) return reject(why, "no witness kind");
    const std::string kind = witness.at("kind");
    const Graph g = graph6_decode(witness.at("graph6").get<std::string>());

    if (kind == "invariant") {
      if (witness.contains("construction")) {
        const auto& c = witness.at("construction");
        const Graph host = graph6_decode(c.at("host_graph6").get<std::string>());
        if (!(build_token_graph(host, c.at("k"), c.at("m")).graph == g))
          return reject(why, "graph is not the stated token graph of its host");
      }
      const int value = witness.at("value");
      const int measured = detail::measure(g, witness.at("invariant"));
      if (measured != value)
        return reject(why, "recomputed value " + std::to_string(measured) + " != " + std::to_string(value));
      if (!claim_violated(value, witness.at("claim"))) return reject(why, "claim is not violated");
      return true;
    }
    if (kind == "not_isomorphic") {
      const Graph h = graph6_decode(witness.at("other_graph6").get<std::string>());
      if (is_isomorphic(g, h).isomorphic) return reject(why, "graphs are isomorphic");
      return true;
    }
    if (kind == "group_order") {
      const BigInt order = automorphism_group(g).order();
      if (to_decimal(order) != witness.at("order").get<std::string>())
        return reject(why, "recomputed order " + to_decimal(order));
      if (witness.at("order") == witness.at("formula")) return reject(why, "order agrees with formula");
      return true;
    }
    if (kind == "edge_sets_differ") {
      const auto& pair = witness.at("pair");
      const TokenConfig a = config_from(pair.at(0));
      const TokenConfig b = config_from(pair.at(1));
      const bool in_f22 = config_adjacent(g, a, b, 2);
      const bool in_f2c = !config_adjacent(g, a, b, 1);
      if (in_f22 != witness.at("in_f22").get<bool>() || in_f2c != witness.at("in_f2_complement").get<bool>())
        return reject(why, "adjacency flags do not reproduce");
      if (in_f22 == in_f2c) return reject(why, "edge sets agree on this pair");
      return true;
    }
    if (kind == "edge_conflict") {
      const int n = witness.at("n");
      const auto variant =
          witness.at("variant") == "c" ? CycleColoringVariant::kC : CycleColoringVariant::kCPrime;
      if (!(build_token_graph(cycle_graph(n), 2, 2).graph == g))
        return reject(why, "graph is not F_2^2(C_n)");
      const CycleColoring coloring = cycle_coloring(n, variant);
      std::vector<int> color(g.order(), -1);
      for (const auto& [config, c] : coloring.assignment) color[subset_rank(n, config)] = c;
      const auto& conflicts = witness.at("conflicts");
      if (conflicts.empty()) return reject(why, "no conflicts listed");
      for (const auto& pair : conflicts) {
        const int a = static_cast<int>(subset_rank(n, config_from(pair.at(0))));
        const int b = static_cast<int>(subset_rank(n, config_from(pair.at(1))));
        if (!g.adjacent(a, b)) return reject(why, "listed conflict is not an edge");
        if (color[a] < 0 || color[a] != color[b]) return reject(why, "listed conflict has distinct colours");
      }
      return true;
    }
    if (kind == "arcs_condition") {
      const int k = witness.at("k");
      const bool fast = arcs_union_complete_condition(g, k);
      const bool literal = arcs_union_complete_condition_literal(g, k);
      const std::int64_t configs = binomial(g.order(), k);
      const bool complete = build_move_union(g, k).graph.size() == configs * (configs - 1) / 2;
      if (fast != witness.at("fast").get<bool>() || literal != witness.at("literal").get<bool>() ||
          complete != witness.at("union_complete").get<bool>())
        return reject(why, "recorded flags do not reproduce");
      if (fast == literal && literal == complete) return reject(why, "all three agree");
      return true;
    }
    if (kind == "embedding") {
      const PermGroup aut = automorphism_group(g);
      const TokenGraph t = build_token_graph(g, 2, 2);
      std::vector<Permutation> induced;
      for (const auto& f : aut.generators()) induced.push_back(induced_token_automorphism(g, f, t));
      const BigInt image = PermGroup(t.graph.order(), induced).order();
      const BigInt token = automorphism_group(t.graph).order();
      if (image == aut.order() && token % aut.order() == 0) return reject(why, "embedding holds");
      return true;
    }
    return reject(why, "unknown witness kind '" + kind + "'");
  } catch (const std::exception& e) {
    return reject(why, e.what());
  }
}

}  // namespace tokgraph::harness
