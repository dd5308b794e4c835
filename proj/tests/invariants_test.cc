#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.h"
#include "tokgraph/errors.h"
#include "tokgraph/graph.h"
#include "tokgraph/invariants.h"
#include "tokgraph/token_graph.h"

namespace tokgraph {
namespace {

TEST(Components, CountsAndSets) {
  const Graph g = disjoint_union(cycle_graph(3), disjoint_union(Graph(1), path_graph(2)));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<int>{3}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Bipartite, CertificatesValidate) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.3);
    const auto cert = bipartiteness(g);
    EXPECT_TRUE(validate(g, cert));
    EXPECT_EQ(cert.bipartite, oracle::chi(g) <= 2);
    if (!cert.bipartite) EXPECT_EQ(cert.odd_cycle.size() % 2, 1u);
  }
}

TEST(Bipartite, TamperedCertificateRejected) {
  auto cert = bipartiteness(cycle_graph(6));
  ASSERT_TRUE(cert.bipartite);
  cert.side[0] ^= 1;
  EXPECT_FALSE(validate(cycle_graph(6), cert));
  auto odd = bipartiteness(cycle_graph(5));
  ASSERT_FALSE(odd.bipartite);
  odd.odd_cycle.pop_back();
  EXPECT_FALSE(validate(cycle_graph(5), odd));
}

TEST(Solvers, MatchExhaustiveOracles) {
  std::mt19937_64 rng(22);
  const double probs[] = {0.3, 0.5, 0.7};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, probs[trial % 3]);
    const auto a = independence_number(g);
    const auto w = clique_number(g);
    const auto c = chromatic_number(g);
    const auto d = domination_number(g);
    const auto i = independent_domination_number(g);
    ASSERT_EQ(a.value, oracle::alpha(g)) << trial;
    ASSERT_EQ(w.value, oracle::omega(g)) << trial;
    ASSERT_EQ(c.value, oracle::chi(g)) << trial;
    ASSERT_EQ(d.value, oracle::gamma(g)) << trial;
    ASSERT_EQ(i.value, oracle::idom(g)) << trial;
    for (const auto* wit : {&a, &w, &c, &d, &i}) ASSERT_TRUE(validate(g, *wit));
  }
}

TEST(Solvers, MatchOraclesOnTokenGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Graph host = oracle::random_graph(rng, n, 0.5);
    const Graph g = build_token_graph(host, 2, 2).graph;
    if (g.order() > 10) continue;
    EXPECT_EQ(independence_number(g).value, oracle::alpha(g));
    EXPECT_EQ(chromatic_number(g).value, oracle::chi(g));
    EXPECT_EQ(domination_number(g).value, oracle::gamma(g));
  }
}

TEST(Solvers, KnownValues) {
  const Graph petersen = kneser_graph(5, 2);
  EXPECT_EQ(independence_number(petersen).value, 4);
  EXPECT_EQ(clique_number(petersen).value, 2);
  EXPECT_EQ(chromatic_number(petersen).value, 3);
  EXPECT_EQ(domination_number(petersen).value, 3);
  EXPECT_EQ(chromatic_number(Graph(1)).value, 1);
  EXPECT_EQ(chromatic_number(Graph(0)).value, 0);
  EXPECT_EQ(independence_number(complete_graph(9)).value, 1);
  EXPECT_EQ(domination_number(cycle_graph(10)).value, 4);
}

TEST(Solvers, Deterministic) {
  std::mt19937_64 rng(24);
  const Graph g = oracle::random_graph(rng, 9, 0.5);
  EXPECT_EQ(independence_number(g).vertices, independence_number(g).vertices);
  EXPECT_EQ(chromatic_number(g).colors, chromatic_number(g).colors);
}

TEST(Solvers, BudgetExhaustionThrows) {
  Budget tiny;
  tiny.max_nodes = 3;
  const Graph g = build_token_graph(cycle_graph(9), 2, 2).graph;
  EXPECT_THROW(independence_number(g, tiny), ResourceError);
  EXPECT_THROW(domination_number(g, tiny), ResourceError);
  EXPECT_THROW(chromatic_number(g, tiny), ResourceError);
}

TEST(Witness, TamperedWitnessRejected) {
  const Graph g = cycle_graph(7);
  auto a = independence_number(g);
  a.vertices[1] = a.vertices[0] + 1;
  EXPECT_FALSE(validate(g, a));
  auto c = chromatic_number(g);
  c.colors[1] = c.colors[0];
  EXPECT_FALSE(validate(g, c));
  auto d = domination_number(g);
  d.vertices.pop_back();
  d.value -= 1;
  EXPECT_FALSE(validate(g, d));
}

// Colour clashes recomputed directly from F_2^2(C_n). The colourings cover
// the non-bipartite component: pairs whose endpoints differ in parity.
std::size_t count_conflicts(const CycleColoring& coloring) {
  const TokenGraph t = build_token_graph(cycle_graph(coloring.n), 2, 2);
  std::map<TokenConfig, int> color(coloring.assignment.begin(), coloring.assignment.end());
  std::size_t clashes = 0;
  for (auto [u, v] : t.graph.edges()) {
    const auto a = color.find(t.labels[u]);
    const auto b = color.find(t.labels[v]);
    if (a == color.end() || b == color.end()) {
      EXPECT_EQ(a == color.end(), b == color.end()) << "edge leaves the coloured component";
      continue;
    }
    clashes += a->second == b->second;
  }
  return clashes;
}

TEST(CycleColoring, ValidationAgreesWithDirectCheck) {
  for (int n = 6; n <= 16; n += 2) {
    const auto variant = n % 3 == 1 ? CycleColoringVariant::kCPrime : CycleColoringVariant::kC;
    const CycleColoring c = cycle_coloring(n, variant);
    EXPECT_EQ(c.assignment.size(), static_cast<std::size_t>(n / 2 * (n / 2)));
    for (const auto& [config, colour] : c.assignment) EXPECT_EQ((config[1] - config[0]) % 2, 1);
    const ColoringValidation v = validate_cycle_coloring(c);
    EXPECT_EQ(v.conflicts.size(), count_conflicts(c)) << n;
    EXPECT_EQ(v.proper, v.conflicts.empty());
    EXPECT_LE(v.colors_used, 3);
  }
}

TEST(CycleColoring, RejectsBadParameters) {
  EXPECT_THROW(cycle_coloring(7, CycleColoringVariant::kC), ParameterError);
  EXPECT_THROW(cycle_coloring(10, CycleColoringVariant::kC), ParameterError);
  EXPECT_THROW(cycle_coloring(8, CycleColoringVariant::kCPrime), ParameterError);
}

}  // namespace
}  // namespace tokgraph
