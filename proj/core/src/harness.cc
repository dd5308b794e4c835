#include "tokgraph/harness.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "checks.h"
#include "tokgraph/errors.h"

#ifndef TOKGRAPH_VERSION
#define TOKGRAPH_VERSION "0.0.0"
#endif

namespace tokgraph {

std::string_view version() { return TOKGRAPH_VERSION; }

namespace harness {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kDiscrepancy: return "discrepancy-expected";
    case Status::kBudgetExceeded: return "budget-exceeded";
    case Status::kSkipped: return "skipped";
  }
  return "unknown";
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [s](const CheckResult& r) { return r.status == s; }));
}

void CheckContext::instance(Json params, int host_n, bool slow,
                            const std::function<void(Outcome&, const Budget&)>& body) {
  CheckResult r;
  r.name = spec_.name;
  r.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  if (host_n > caps_.max_n) {
    r.status = Status::kSkipped;
    r.witness = {{"reason", "host order " + std::to_string(host_n) + " exceeds max_n " +
                                std::to_string(caps_.max_n)}};
  } else if (slow && !caps_.include_slow) {
    r.status = Status::kSkipped;
    r.witness = {{"reason", "slow instance; enable include_slow to run it"}};
  } else {
    Budget budget;
    budget.max_nodes = caps_.max_nodes;
    budget.deadline = start + std::chrono::milliseconds(caps_.timeout_ms);
    Outcome out;
    try {
      body(out, budget);
      r.status = out.status;
      r.expected = std::move(out.expected);
      r.actual = std::move(out.actual);
      r.witness = std::move(out.witness);
    } catch (const ResourceError& e) {
      r.status = Status::kBudgetExceeded;
      r.expected = std::move(out.expected);
      r.witness = {{"reason", e.what()}};
    } catch (const std::exception& e) {
      r.status = Status::kFail;
      r.expected = std::move(out.expected);
      r.witness = {{"kind", "error"}, {"explanation", e.what()}};
    }
  }
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  results_.push_back(std::move(r));
}

const std::vector<CheckSpec>& registry() {
  using namespace detail;
  static const std::vector<CheckSpec> kRegistry = {
      {"c4_example", "F_2^2(C_4) is K_4 plus K_2", false, check_c4_example},
      {"bipartite_disconnected", "connected bipartite G gives a disconnected F_2^2(G)", false,
       check_bipartite_disconnected},
      {"star_structure", "F_2^2(K_{1,n}) is K_n plus C(n,2) isolated vertices", false,
       check_star_structure},
      {"kmn_structure", "F_2^2(K_{m,n}) is K_{mn} plus K_{C(n,2),C(m,2)}, with its invariants",
       false, check_kmn_structure},
      {"fkk_kmn_structure", "component decomposition of F_k^k(K_{m,n})", false,
       check_fkk_kmn_structure},
      {"odd_cycle_product", "F_2^2(C_n) is C_n x P_{(n-1)/2} for odd n", false,
       check_odd_cycle_product},
      {"even_cycle_components", "F_2^2(C_n), n even, has one bipartite and one other component",
       false, check_even_cycle_components},
      {"nonbip_component_structure", "distance classes of the non-bipartite component", false,
       check_nonbip_component_structure},
      {"cycle_chromatic_clique", "chi and omega of F_2^2(C_n) and the explicit colourings", false,
       check_cycle_chromatic_clique},
      {"alpha_cycles", "independence number of F_2^2(C_n)", false, check_alpha_cycles},
      {"alpha_paths", "independence number of F_2^2(P_n)", false, check_alpha_paths},
      {"gamma_cycles", "domination number of F_2^2(C_n) and the cylinder bounds", false,
       check_gamma_cycles},
      {"connectivity_leaves", "connectivity of F_2^2(G) for non-bipartite G and leaf stars", false,
       check_connectivity_leaves},
      {"disjoint_union_lemma", "F_2^2(G + H) is F_2^2(G) + F_2^2(H) + G x H", false,
       check_disjoint_union_lemma},
      {"bipartite_characterization", "F_2^2(G) bipartite iff G is a union of paths", false,
       check_bipartite_characterization},
      {"arcs_union_complete", "when the union of all F_k^i(G) is complete", false,
       check_arcs_union_complete},
      {"complement_corollary", "F_2^2(G) against the complement of F_2(G)", false,
       check_complement_corollary},
      {"aut_embedding", "Aut(G) embeds in Aut(F_2^2(G))", false, check_aut_embedding},
      {"aut_kmn", "order of Aut(F_2^2(K_{m,n}))", false, check_aut_kmn},
      {"aut_odd_cycle", "order of Aut(F_2^2(C_n)) for odd n", false, check_aut_odd_cycle},
      {"diamond_example", "F_2^2 of the diamond", false, check_diamond_example},
      {"alpha_direct_product_paths", "independence number of P_m x P_n and F_2^2(P_n + P_m)",
       false, check_alpha_direct_product_paths},
      {"conjecture_scan", "graphs with |Aut(G)| = |Aut(F_2^2(G))| (informational)", false,
       check_conjecture_scan},
  };
  return kRegistry;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.name);
  return out;
}

std::vector<std::string> resolve_suite(std::string_view suite) {
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  std::size_t pos = 0;
  while (pos <= suite.size()) {
    std::size_t end = suite.find(',', pos);
    if (end == std::string_view::npos) end = suite.size();
    std::string_view token = suite.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    pos = end + 1;
    if (token.empty()) continue;
    if (token == "fast" || token == "all") {
      for (const auto& c : registry())
        if (token == "all" || !c.slow) add(c.name);
      continue;
    }
    const auto& reg = registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckSpec& c) { return c.name == token; });
    if (it == reg.end()) {
      std::string listing = "fast, all";
      for (const auto& c : reg) listing += ", " + c.name;
      throw ParameterError("suite", "unknown check '" + std::string(token) + "'; valid names: " + listing);
    }
    add(it->name);
  }
  if (out.empty()) throw ParameterError("suite", "no checks selected");
  return out;
}

Report run_suite(const SuiteOptions& options) {
  const std::vector<std::string> names = resolve_suite(options.suite);
  std::vector<const CheckSpec*> specs;
  for (const auto& name : names)
    for (const auto& c : registry())
      if (c.name == name) specs.push_back(&c);

  std::vector<std::vector<CheckResult>> per_check(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      CheckContext ctx(*specs[i], options.seed, options.caps);
      specs[i]->run(ctx);
      per_check[i] = ctx.take();
    }
  };
  const int jobs = std::clamp(options.jobs, 1, static_cast<int>(specs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  Report report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.caps = options.caps;
  for (auto& results : per_check)
    for (auto& r : results) report.checks.push_back(std::move(r));
  return report;
}

}  // namespace harness
}  // namespace tokgraph
