#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "tokgraph/errors.h"
#include "tokgraph/graph.h"
#include "tokgraph/graph_io.h"

namespace tokgraph {
namespace {

TEST(Graph, BuilderCollapsesDuplicates) {
  GraphBuilder b(3);
  b.add_edge(0, 1).add_edge(1, 0).add_edge(1, 2);
  const Graph g = std::move(b).build();
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, RejectsLoopsAndRange) {
  const std::vector<Edge> loop = {{0, 1}, {2, 2}};
  try {
    from_edge_list(3, loop);
    FAIL() << "self-loop accepted";
  } catch (const ParameterError& e) {
    EXPECT_EQ(e.field(), "edges[1]");
  }
  const std::vector<Edge> far = {{0, 5}};
  EXPECT_THROW(from_edge_list(3, far), ParameterError);
}

TEST(Families, SizesAndDegrees) {
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(cycle_graph(7).size(), 7);
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_EQ(complete_bipartite_graph(2, 3).size(), 6);
  const Graph star = star_graph(4);
  EXPECT_EQ(star.degree(0), 4);
  EXPECT_EQ(star.size(), 4);
  const Graph d = diamond_graph();
  EXPECT_EQ(d.size(), 5);
  EXPECT_FALSE(d.adjacent(2, 3));
  // Petersen graph.
  const Graph petersen = kneser_graph(5, 2);
  EXPECT_EQ(petersen.order(), 10);
  EXPECT_EQ(petersen.size(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3);
}

TEST(Families, CycleWithBicliques) {
  const std::vector<int> att = {2, 3};
  const Graph g = cycle_with_bicliques(4, att);
  EXPECT_EQ(g.order(), 4 + 3 + 4);
  EXPECT_EQ(g.size(), 4 + 2 * 2 + 2 * 3);
  EXPECT_EQ(g.degree(0), 2 + 2);
  EXPECT_EQ(g.degree(1), 2 + 3);
  EXPECT_EQ(g.degree(6), 2);  // apex of the first K_{2,2}
}

TEST(Families, BadParameters) {
  EXPECT_THROW(cycle_graph(2), ParameterError);
  EXPECT_THROW(kneser_graph(3, 0), ParameterError);
  EXPECT_THROW(generate({Family::kCycle, {}}), ParameterError);
  EXPECT_THROW(parse_family("petersen"), ParameterError);
  const std::vector<int> too_many = {1, 1, 1, 1};
  EXPECT_THROW(cycle_with_bicliques(3, too_many), ParameterError);
}

TEST(Families, GenerateByName) {
  for (auto name : family_names()) EXPECT_EQ(family_name(parse_family(name)), name);
  EXPECT_EQ(generate({parse_family("complete_bipartite"), {2, 3}}), complete_bipartite_graph(2, 3));
}

TEST(Operations, Products) {
  const Graph p2 = path_graph(2);
  const Graph c5 = cycle_graph(5);
  const Graph prism = cartesian_product(c5, p2);
  EXPECT_EQ(prism.order(), 10);
  EXPECT_EQ(prism.size(), 15);
  EXPECT_TRUE(prism.adjacent(0 * 2 + 0, 0 * 2 + 1));
  EXPECT_TRUE(prism.adjacent(0 * 2 + 1, 1 * 2 + 1));
  const Graph t = tensor_product(path_graph(3), path_graph(3));
  EXPECT_EQ(t.size(), 2 * 2 * 2);
  EXPECT_TRUE(t.adjacent(0 * 3 + 0, 1 * 3 + 1));
  EXPECT_FALSE(t.adjacent(0 * 3 + 0, 0 * 3 + 1));
}

TEST(Operations, UnionComplementInduced) {
  const Graph u = disjoint_union(complete_graph(3), path_graph(2));
  EXPECT_EQ(u.order(), 5);
  EXPECT_TRUE(u.adjacent(3, 4));
  EXPECT_FALSE(u.adjacent(2, 3));
  EXPECT_EQ(complement(complete_graph(5)).size(), 0);
  EXPECT_EQ(complement(cycle_graph(5)).size(), 5);
  const std::vector<int> keep = {4, 0, 1};
  const Graph h = induced_subgraph(cycle_graph(5), keep);
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_TRUE(h.adjacent(1, 2));
  EXPECT_FALSE(h.adjacent(0, 2));
}

TEST(Operations, LeafStars) {
  const auto stars = leaf_stars(star_graph(3));
  ASSERT_EQ(stars.size(), 1u);
  EXPECT_EQ(stars[0], (LeafStar{0, {1, 2, 3}}));
  // K_2: each end is the other's leaf.
  EXPECT_EQ(leaf_stars(path_graph(2)).size(), 2u);
  EXPECT_TRUE(leaf_stars(cycle_graph(4)).empty());
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  EXPECT_EQ(graph6_encode(Graph(1)), "@");
  EXPECT_EQ(graph6_encode(path_graph(2)), "A_");
  // P_3 = 0-1-2 sets bits (0,1) and (1,2): 100101 -> "Bg"; the star
  // centred at 0 sets (0,1) and (0,2): 110 -> "Bo" is K_{1,2} on 0.
  EXPECT_EQ(graph6_encode(path_graph(3)), "Bg");
  EXPECT_EQ(graph6_encode(star_graph(2)), "Bo");
  EXPECT_EQ(graph6_encode(cycle_graph(5)), "Dhc");
  EXPECT_EQ(graph6_encode(complete_graph(4)), "C~");
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 70);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const std::string s = graph6_encode(g);
    EXPECT_EQ(graph6_decode(s), g) << s;
  }
}

TEST(Graph6, LongHeader) {
  const Graph g = cycle_graph(70);
  const std::string s = graph6_encode(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(graph6_decode(s), g);
  EXPECT_EQ(graph6_decode(">>graph6<<" + s + "\n"), g);
}

TEST(Graph6, ParseErrorsCarryOffset) {
  try {
    graph6_decode("D h");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_THROW(graph6_decode("Dh"), ParseError);     // truncated
  EXPECT_THROW(graph6_decode("Dhcc"), ParseError);   // trailing data
}

TEST(EdgeList, RoundTrip) {
  const Graph g = kneser_graph(5, 2);
  EXPECT_EQ(edge_list_decode(edge_list_encode(g)), g);
  EXPECT_EQ(edge_list_decode("# comment\n3 2\n\n0 1\n1 2\n"), path_graph(3));
  EXPECT_THROW(edge_list_decode("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(edge_list_decode("3 1\n0 x\n"), ParseError);
}

TEST(Dot, UsesLabels) {
  const std::string dot = dot_export(path_graph(2), {"a", "b"});
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("\"a\""), std::string::npos);
  EXPECT_NE(dot.find("--"), std::string::npos);
}

}  // namespace
}  // namespace tokgraph
