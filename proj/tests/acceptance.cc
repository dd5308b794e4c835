// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Usage: acceptance [path-to-tokgraph-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "tokgraph/canonical.h"
#include "tokgraph/combinatorics.h"
#include "tokgraph/graph.h"
#include "tokgraph/harness.h"
#include "tokgraph/invariants.h"
#include "tokgraph/token_graph.h"

#ifndef TOKGRAPH_CLI_PATH
#define TOKGRAPH_CLI_PATH "tokgraph"
#endif

namespace {

using namespace tokgraph;
using harness::Json;
using harness::Status;

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Graph f22(const Graph& g) { return build_token_graph(g, 2, 2).graph; }

harness::Report run(const std::string& suite, bool slow = false) {
  harness::SuiteOptions o;
  o.suite = suite;
  o.seed = 42;
  o.caps.include_slow = slow;
  o.jobs = 4;
  return harness::run_suite(o);
}

// No fails, no budget overruns, no skips, and every discrepancy carries a
// witness that re-validates.
void require_clean(Verdict& v, const harness::Report& r, const std::string& label) {
  int discrepancies = 0;
  for (const auto& c : r.checks) {
    const std::string id = label + " " + c.name + " " + c.params.dump();
    v.require(c.status != Status::kFail, id + " status fail");
    v.require(c.status != Status::kBudgetExceeded, id + " budget exceeded");
    v.require(c.status != Status::kSkipped, id + " skipped");
    if (c.status == Status::kDiscrepancy) {
      ++discrepancies;
      std::string why;
      v.require(harness::revalidate_witness(c.witness, &why), id + " witness: " + why);
    }
  }
  if (discrepancies > 0) v.note(label + ": " + std::to_string(discrepancies) + " documented discrepancies");
}

const harness::CheckResult* find(const harness::Report& r, const std::function<bool(const Json&)>& pred) {
  for (const auto& c : r.checks)
    if (pred(c.params)) return &c;
  return nullptr;
}

Verdict criterion1() {
  Verdict v;
  const IsoResult r = is_isomorphic(f22(cycle_graph(4)), disjoint_union(complete_graph(4), complete_graph(2)));
  v.require(r.isomorphic && r.mapping.has_value(), "F_2^2(C_4) vs K_4 + K_2");
  require_clean(v, run("c4_example"), "c4_example");
  return v;
}

Verdict criterion2() {
  Verdict v;
  for (int n = 2; n <= 7; ++n) {
    const Graph t = f22(star_graph(n));
    const int iso = static_cast<int>(binomial(n, 2));
    v.require(is_isomorphic(t, disjoint_union(complete_graph(n), Graph(iso))).isomorphic,
              "star structure n=" + std::to_string(n));
    v.require(domination_number(t).value == iso + 1, "gamma n=" + std::to_string(n));
    v.require(independence_number(t).value == iso + 1, "alpha n=" + std::to_string(n));
  }
  require_clean(v, run("star_structure"), "star_structure");
  return v;
}

Verdict criterion3() {
  Verdict v;
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      const std::string id = " m=" + std::to_string(m) + " n=" + std::to_string(n);
      const Graph t = f22(complete_bipartite_graph(m, n));
      const int a = static_cast<int>(binomial(n, 2));
      const int b = static_cast<int>(binomial(m, 2));
      v.require(is_isomorphic(t, disjoint_union(complete_graph(m * n), complete_bipartite_graph(a, b))).isomorphic,
                "structure" + id);
      v.require(chromatic_number(t).value == m * n, "chi" + id);
      v.require(clique_number(t).value == m * n, "omega" + id);
      v.require(independence_number(t).value == std::max(a, b) + 1, "alpha" + id);
    }
  const auto r = run("kmn_structure");
  require_clean(v, r, "kmn_structure");
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      const auto* c = find(r, [&](const Json& p) {
        return p.value("m", 0) == m && p.value("n", 0) == n && p.value("part", "") == "gamma";
      });
      v.require(c != nullptr, "gamma instance present");
      if (!c) continue;
      const int gamma = c->actual.value("gamma", -1);
      const Status want = gamma == 3 ? Status::kPass : Status::kDiscrepancy;
      v.require(c->status == want, "gamma status m=" + std::to_string(m) + " n=" + std::to_string(n));
      if (m == 2) v.require(c->status == Status::kDiscrepancy, "gamma flagged for min(m,n)=2");
    }
  return v;
}

Verdict criterion4() {
  Verdict v;
  const auto r = run("fkk_kmn_structure");
  require_clean(v, r, "fkk_kmn_structure");
  bool k2 = false, k3 = false;
  for (const auto& c : r.checks) {
    k2 = k2 || c.params.value("k", 0) == 2;
    k3 = k3 || c.params.value("k", 0) == 3;
    v.require(c.actual.value("isomorphic", false), "decomposition " + c.params.dump());
  }
  v.require(k2 && k3, "both k = 2 and k = 3 covered");
  v.note(std::to_string(r.checks.size()) + " instances");
  return v;
}

Verdict criterion5() {
  Verdict v;
  for (int n : {5, 7, 9, 11}) {
    const Graph t = f22(cycle_graph(n));
    v.require(is_isomorphic(t, cartesian_product(cycle_graph(n), path_graph((n - 1) / 2))).isomorphic,
              "odd cycle product n=" + std::to_string(n));
  }
  require_clean(v, run("odd_cycle_product"), "odd_cycle_product");
  return v;
}

Verdict criterion6() {
  Verdict v;
  for (int n = 3; n <= 12; ++n) {
    const Graph t = f22(cycle_graph(n));
    const int chi = chromatic_number(t).value;
    const int omega = clique_number(t).value;
    const std::string id = " n=" + std::to_string(n);
    v.require(chi == (n == 4 ? 4 : 3), "chi" + id);
    const int want_omega = n == 4 ? 4 : (n == 3 || n == 6) ? 3 : 2;
    v.require(omega == want_omega, "omega" + id);
  }
  for (int n : {5, 7, 9})
    v.require(independence_number(f22(cycle_graph(n))).value == (n - 1) / 2 * ((n - 1) / 2),
              "alpha odd n=" + std::to_string(n));
  for (int n : {6, 8, 10})
    v.require(independence_number(f22(cycle_graph(n))).value == n * (n - 2) / 8 + binomial(n / 2, 2),
              "alpha even n=" + std::to_string(n));
  v.require(domination_number(f22(cycle_graph(5))).value == 3, "gamma C_5");
  v.require(domination_number(f22(cycle_graph(7))).value == 6, "gamma C_7");
  v.require(domination_number(f22(cycle_graph(11))).value == 14, "gamma C_11");
  require_clean(v, run("cycle_chromatic_clique,alpha_cycles"), "cycle checks");
  const auto g = run("gamma_cycles", true);
  require_clean(v, g, "gamma_cycles (slow included)");
  const auto* c11 = find(g, [](const Json& p) { return p.value("n", 0) == 11 && p.value("part", "") == "exact"; });
  v.require(c11 && c11->status == Status::kPass, "harness gamma C_11 = 14");
  return v;
}

Verdict criterion7() {
  Verdict v;
  for (int n = 2; n <= 9; ++n)
    v.require(independence_number(f22(path_graph(n))).value == (n / 2) * ((n + 1) / 2),
              "alpha path n=" + std::to_string(n));
  require_clean(v, run("alpha_paths"), "alpha_paths");
  return v;
}

Verdict criterion8() {
  Verdict v;
  int bipartite_agree = 0;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Graph g = harness::graph_from_mask(5, mask);
    const bool paths = g.max_degree() <= 2 && g.size() == 5 - static_cast<int>(connected_components(g).size());
    bipartite_agree += bipartiteness(f22(g)).bipartite == paths;
  }
  v.require(bipartite_agree == 1024, "bipartite iff disjoint union of paths on all 1024 graphs");
  const auto r = run("bipartite_characterization,arcs_union_complete,complement_corollary");
  require_clean(v, r, "sweeps");
  for (const auto& c : r.checks) {
    if (c.name == "bipartite_characterization" && c.params.value("claim", "") == "bipartite")
      v.require(c.status == Status::kPass, "bipartite claim " + c.params.dump());
    if (c.name == "arcs_union_complete") v.require(c.status == Status::kPass, "arcs union " + c.params.dump());
  }
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::mt19937_64 rng(9);
  const double probs[] = {0.3, 0.5, 0.7};
  int mismatches = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), probs[i % 3]);
    mismatches += independence_number(g).value != oracle::alpha(g);
    mismatches += clique_number(g).value != oracle::omega(g);
    mismatches += chromatic_number(g).value != oracle::chi(g);
    mismatches += domination_number(g).value != oracle::gamma(g);
  }
  v.require(mismatches == 0, "solver/oracle agreement on 300 graphs");
  int degree_mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, probs[i % 3]);
    const auto configs = oracle::subsets(n, 2);
    for (const auto& a : configs) {
      int degree = 0;
      for (const auto& b : configs) degree += oracle::token_adjacent(g, a, b, 2);
      degree_mismatches += predicted_degree_f22(g, a[0], a[1]) != degree;
    }
  }
  v.require(degree_mismatches == 0, "degree formula on 200 graphs");
  return v;
}

Verdict criterion10() {
  Verdict v;
  for (int n : {5, 7, 9})
    v.require(automorphism_group(f22(cycle_graph(n))).order() == 4 * n, "Aut C_" + std::to_string(n));
  v.require(automorphism_group(f22(complete_bipartite_graph(2, 3))).order() == 4320, "Aut K_{2,3}");
  v.require(automorphism_group(f22(diamond_graph())).order() == 24, "Aut diamond");
  const auto r = run("aut_kmn,aut_odd_cycle,diamond_example,aut_embedding");
  require_clean(v, r, "automorphism checks");
  const auto* k22 = find(r, [](const Json& p) { return p.value("m", 0) == 2 && p.value("n", 0) == 2; });
  v.require(k22 && k22->status == Status::kDiscrepancy && k22->actual["order"] == "48" &&
                k22->expected["order"] == "24",
            "K_{2,2} order 48 vs 24 flagged");
  for (const auto& c : r.checks)
    if (c.name == "aut_embedding")
      v.require(c.actual.value("injective", 0) >= 100 && c.actual.value("divides", 0) >= 100, "embedding on 100 graphs");
  return v;
}

Verdict criterion11() {
  Verdict v;
  const auto r = run("connectivity_leaves,disjoint_union_lemma");
  require_clean(v, r, "connectivity and union");
  int random_graphs = 0, family = 0, pairs = 0;
  for (const auto& c : r.checks) {
    if (c.name == "disjoint_union_lemma") pairs += c.actual.value("isomorphic", 0);
    if (c.params.value("part", "") == "random") random_graphs += c.actual.value("graphs", 0);
    if (c.params.value("part", "") == "cycle_with_bicliques") ++family;
  }
  v.require(random_graphs >= 200, "200 non-bipartite connected graphs");
  v.require(family > 0, "cycle_with_bicliques family covered");
  v.require(pairs >= 50, "50 disjoint union pairs");
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict criterion12(const std::string& cli) {
  Verdict v;
  const std::string a = "acceptance_report_a.json";
  const std::string b = "acceptance_report_b.json";
  for (const auto& out : {a, b}) {
    const std::string cmd = "\"" + cli + "\" verify --suite fast --seed 42 --out " + out + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    v.require(rc == 0, "verify exit status for " + out);
  }
  Json ja, jb;
  try {
    ja = Json::parse(slurp(a));
    jb = Json::parse(slurp(b));
  } catch (const std::exception& e) {
    v.require(false, std::string("report parse: ") + e.what());
    return v;
  }
  for (Json* j : {&ja, &jb})
    for (auto& c : (*j)["checks"]) c.erase("runtime_ms");
  v.require(ja.dump() == jb.dump(), "reports identical modulo runtime_ms");
  v.note(std::to_string(ja["checks"].size()) + " results compared");
  std::remove(a.c_str());
  std::remove(b.c_str());
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : TOKGRAPH_CLI_PATH;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"F_2^2(C_4) is K_4 + K_2", criterion1},
      {"star token graphs and their gamma, alpha", criterion2},
      {"K_{m,n} structure and invariants", criterion3},
      {"F_k^k(K_{m,n}) components", criterion4},
      {"odd cycles give C_n x P_(n-1)/2", criterion5},
      {"cycle invariants chi, omega, alpha, gamma", criterion6},
      {"alpha of path token graphs", criterion7},
      {"exhaustive 5-vertex sweeps", criterion8},
      {"solvers and degree formula vs oracles", criterion9},
      {"automorphism orders and embedding", criterion10},
      {"connectivity with leaves, disjoint unions", criterion11},
      {"verify report determinism", [&] { return criterion12(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2zu: %s (%.2fs)\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    for (const auto& n : v.notes) std::printf("         %s\n", n.c_str());
    failed += !v.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
