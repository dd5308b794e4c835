#ifndef TOKGRAPH_GRAPH_H_
#define TOKGRAPH_GRAPH_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tokgraph/vertex_set.h"

namespace tokgraph {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; use
// GraphBuilder or from_edge_list to construct one.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  int edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  // Duplicate edges are ignored. Out-of-range endpoints and self-loops throw
  // ParameterError.
  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const { return graph_.adjacent(u, v); }
  int order() const { return graph_.order(); }

  Graph build() &&;

 private:
  Graph graph_;
};

// Symmetric closure of `edges`; duplicates collapse. Rejects self-loops and
// out-of-range indices with a ParameterError whose field names the edge
// position ("edges[3]").
Graph from_edge_list(int n, std::span<const Edge> edges);

// ---------------------------------------------------------------------------
// Named families.

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kStar,
  kDiamond,
  kKneser,
  kCycleWithBicliques,
};

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

std::string_view family_name(Family f);
// Throws ParameterError(field "family") for unknown names.
Family parse_family(std::string_view name);
std::vector<std::string_view> family_names();

// Vertex numbering:
//   path(n), cycle(n): 0..n-1 in order along the path/cycle.
//   complete_bipartite(m, n): side M is 0..m-1, side N is m..m+n-1.
//   star(n): K_{1,n}, center 0, leaves 1..n.
//   diamond(): K_4 minus the edge {2, 3}.
//   kneser(n, k): k-subsets of {0..n-1} in lexicographic order.
//   cycle_with_bicliques(c, m_1, .., m_j): cycle 0..c-1 first; then, for
//     i = 1..j, m_i fresh vertices followed by one apex u_i. Each fresh
//     vertex is adjacent to cycle vertex i-1 and to u_i, so {v_{i-1}, u_i}
//     is the two-vertex side of a K_{2,m_i}. Requires j <= c.
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph star_graph(int n);
Graph diamond_graph();
Graph kneser_graph(int n, int k);
Graph cycle_with_bicliques(int cycle_length, std::span<const int> attachments);

// ---------------------------------------------------------------------------
// Operations.

// H's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
// Vertex (a, b) is numbered a * h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph tensor_product(const Graph& g, const Graph& h);
// Subgraph induced by `vertices`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
// Vertex v of g becomes image[v].
Graph relabel(const Graph& g, std::span<const int> image);

struct LeafStar {
  int center;
  std::vector<int> leaves;

  bool operator==(const LeafStar&) const = default;
};

// For every vertex with at least one degree-1 neighbour, that neighbour set;
// sorted by center.
std::vector<LeafStar> leaf_stars(const Graph& g);

}  // namespace tokgraph

#endif  // TOKGRAPH_GRAPH_H_
