#include "tokgraph/graph.h"

#include <algorithm>
#include <string>

#include "tokgraph/errors.h"

namespace tokgraph {

Graph::Graph(int n) {
  if (n < 0) throw ParameterError("n", "vertex count must be non-negative");
  adj_.assign(n, VertexSet(n));
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = graph_.order();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw ParameterError("edge", "endpoint out of range [0, " + std::to_string(n) + ")");
  if (u == v) throw ParameterError("edge", "self-loop at vertex " + std::to_string(u));
  if (!graph_.adj_[u].contains(v)) {
    graph_.adj_[u].insert(v);
    graph_.adj_[v].insert(u);
    ++graph_.edge_count_;
  }
  return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw ParameterError("n", "vertex count must be non-negative");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const std::string field = "edges[" + std::to_string(i) + "]";
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParameterError(field, "endpoint out of range in (" + std::to_string(u) + ", " +
                                      std::to_string(v) + ")");
    if (u == v) throw ParameterError(field, "self-loop at vertex " + std::to_string(u));
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  GraphBuilder b(ng + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + ng, v + ng);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  GraphBuilder b(g.order() * nh);
  for (int a = 0; a < g.order(); ++a)
    for (auto [x, y] : h.edges()) b.add_edge(a * nh + x, a * nh + y);
  for (auto [a, c] : g.edges())
    for (int x = 0; x < nh; ++x) b.add_edge(a * nh + x, c * nh + x);
  return std::move(b).build();
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  GraphBuilder b(g.order() * nh);
  for (auto [a, c] : g.edges())
    for (auto [x, y] : h.edges()) {
      b.add_edge(a * nh + x, c * nh + y);
      b.add_edge(a * nh + y, c * nh + x);
    }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const int> image) {
  if (static_cast<int>(image.size()) != g.order())
    throw ParameterError("image", "length must equal the vertex count");
  std::vector<char> seen(g.order(), 0);
  for (int x : image) {
    if (x < 0 || x >= g.order() || seen[x]) throw ParameterError("image", "not a permutation");
    seen[x] = 1;
  }
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(image[u], image[v]);
  return std::move(b).build();
}

std::vector<LeafStar> leaf_stars(const Graph& g) {
  std::vector<LeafStar> out;
  for (int c = 0; c < g.order(); ++c) {
    LeafStar star{c, {}};
    g.neighbors(c).for_each([&](int v) {
      if (g.degree(v) == 1) star.leaves.push_back(v);
    });
    if (!star.leaves.empty()) out.push_back(std::move(star));
  }
  return out;
}

}  // namespace tokgraph
