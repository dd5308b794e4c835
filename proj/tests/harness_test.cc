#include <gtest/gtest.h>

#include <set>

#include "tokgraph/errors.h"
#include "tokgraph/graph.h"
#include "tokgraph/graph_io.h"
#include "tokgraph/harness.h"
#include "tokgraph/invariants.h"
#include "tokgraph/token_graph.h"

namespace tokgraph::harness {
namespace {

Json strip_runtime(Json report) {
  for (auto& c : report["checks"]) c.erase("runtime_ms");
  return report;
}

TEST(Registry, NamesUnique) {
  const auto names = check_names();
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  EXPECT_EQ(names.size(), 23u);
  for (const auto& spec : registry()) EXPECT_FALSE(spec.summary.empty()) << spec.name;
}

TEST(Registry, ResolveSuite) {
  EXPECT_EQ(resolve_suite("all"), check_names());
  EXPECT_EQ(resolve_suite("aut_kmn"), std::vector<std::string>{"aut_kmn"});
  EXPECT_EQ(resolve_suite("alpha_paths,c4_example"), (std::vector<std::string>{"alpha_paths", "c4_example"}));
  try {
    resolve_suite("unknown");
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_EQ(e.field(), "suite");
    EXPECT_NE(std::string(e.what()).find("c4_example"), std::string::npos);
  }
}

TEST(Rng, PortableStream) {
  // std::mt19937_64 is required to produce this as its 10000th output.
  Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  EXPECT_EQ(x, 9981545732273789042ULL);
  Rng a(1);
  for (int i = 0; i < 1000; ++i) {
    const int v = a.uniform_int(3, 8);
    ASSERT_GE(v, 3);
    ASSERT_LE(v, 8);
    const double r = a.uniform_real();
    ASSERT_GE(r, 0.0);
    ASSERT_LT(r, 1.0);
  }
  // FNV-1a-64 of "a" is 0xaf63dc4c8601ec8c.
  EXPECT_EQ(check_seed(0, "a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(check_seed(42, "a"), 0xaf63dc4c8601ec8cULL ^ 42);
}

TEST(Sampler, RespectsClass) {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 3, 8, GraphClass::kConnectedNonBipartite);
    ASSERT_TRUE(is_connected(g));
    ASSERT_FALSE(bipartiteness(g).bipartite);
    const Graph h = random_graph(rng, 3, 8, GraphClass::kConnectedBipartite);
    ASSERT_TRUE(is_connected(h));
    ASSERT_TRUE(bipartiteness(h).bipartite);
    ASSERT_GE(h.order(), 3);
    ASSERT_LE(h.order(), 8);
  }
  EXPECT_EQ(graph_from_mask(3, 0b101), path_graph(3));
}

TEST(Suite, C4ExamplePasses) {
  SuiteOptions o;
  o.suite = "c4_example";
  o.seed = 1;
  const Report r = run_suite(o);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, Status::kPass);
}

TEST(Suite, AutKmnSwapFactor) {
  SuiteOptions o;
  o.suite = "aut_kmn";
  const Report r = run_suite(o);
  bool found = false;
  for (const auto& c : r.checks) {
    if (c.params.value("m", 0) == 2 && c.params.value("n", 0) == 2) {
      found = true;
      EXPECT_EQ(c.status, Status::kDiscrepancy);
      EXPECT_EQ(c.actual["order"], "48");
      EXPECT_EQ(c.expected["order"], "24");
    }
    if (c.params.value("m", 0) == 2 && c.params.value("n", 0) == 3) EXPECT_EQ(c.actual["order"], "4320");
  }
  EXPECT_TRUE(found);
}

TEST(Suite, SkipsAboveSizeCap) {
  SuiteOptions o;
  o.suite = "odd_cycle_product";
  o.caps.max_n = 7;
  const Report r = run_suite(o);
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_EQ(r.checks[0].status, Status::kPass);
  EXPECT_EQ(r.checks[3].status, Status::kSkipped);
}

TEST(Suite, BudgetExceededIsReported) {
  SuiteOptions o;
  o.suite = "gamma_cycles";
  o.caps.max_nodes = 10;
  const Report r = run_suite(o);
  EXPECT_GT(r.count(Status::kBudgetExceeded), 0);
  EXPECT_EQ(r.count(Status::kFail), 0);
}

TEST(Suite, DeterministicAndParallelSafe) {
  SuiteOptions o;
  o.suite = "bipartite_disconnected,connectivity_leaves,aut_embedding,conjecture_scan";
  o.seed = 42;
  const Json a = strip_runtime(to_json(run_suite(o)));
  o.jobs = 4;
  const Json b = strip_runtime(to_json(run_suite(o)));
  EXPECT_EQ(a.dump(), b.dump());
  o.seed = 43;
  const Json c = strip_runtime(to_json(run_suite(o)));
  EXPECT_NE(a.dump(), c.dump());
}

TEST(Suite, ReportSchema) {
  SuiteOptions o;
  o.suite = "diamond_example";
  const Json j = to_json(run_suite(o));
  for (const char* key : {"suite", "seed", "version", "caps", "checks", "summary"}) EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"pass", "fail", "discrepancy", "skipped", "budget_exceeded"})
    EXPECT_TRUE(j["summary"].contains(key)) << key;
  for (const char* key : {"name", "params", "status", "expected", "actual", "witness", "runtime_ms"})
    EXPECT_TRUE(j["checks"][0].contains(key)) << key;
}

TEST(Witness, EveryFastDiscrepancyRevalidates) {
  SuiteOptions o;
  o.suite = "fast";
  o.seed = 42;
  o.jobs = 4;
  const Report r = run_suite(o);
  EXPECT_EQ(r.count(Status::kFail), 0);
  int checked = 0;
  for (const auto& c : r.checks) {
    if (c.status != Status::kDiscrepancy && c.status != Status::kFail) continue;
    std::string why;
    EXPECT_TRUE(revalidate_witness(c.witness, &why)) << c.name << " " << c.params.dump() << ": " << why;
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Witness, ForgedWitnessesRejected) {
  std::string why;
  const Json true_claim = {{"kind", "invariant"},
                           {"graph6", graph6_encode(cycle_graph(5))},
                           {"invariant", "chi"},
                           {"value", 3},
                           {"claim", {{"op", "=="}, {"rhs", 3}}},
                           {"explanation", "holds"}};
  EXPECT_FALSE(revalidate_witness(true_claim, &why));
  Json wrong_value = true_claim;
  wrong_value["value"] = 2;
  wrong_value["claim"]["rhs"] = 3;
  EXPECT_FALSE(revalidate_witness(wrong_value, &why));
  const Json iso = {{"kind", "not_isomorphic"},
                    {"graph6", graph6_encode(cycle_graph(5))},
                    {"other_graph6", graph6_encode(relabel(cycle_graph(5), std::vector<int>{2, 0, 4, 1, 3}))}};
  EXPECT_FALSE(revalidate_witness(iso, &why));
  EXPECT_FALSE(revalidate_witness(Json{{"kind", "invariant"}, {"graph6", "??"}}, &why));
  EXPECT_FALSE(revalidate_witness(Json(nullptr), &why));
}

}  // namespace
}  // namespace tokgraph::harness
