#ifndef TOKGRAPH_TOKEN_GRAPH_H_
#define TOKGRAPH_TOKEN_GRAPH_H_

#include <string>
#include <string_view>
#include <vector>

#include "tokgraph/graph.h"

namespace tokgraph {

// A placement of k indistinguishable tokens: strictly increasing vertex
// indices.
using TokenConfig = std::vector<int>;

enum class TokenVariant {
  kGeneralized,  // F_k^m: exactly m tokens move, each along an edge.
  kMatching,     // F_{k,r}: |A delta B| = 2r and a perfect matching A\B -> B\A.
  kAllEdges,     // F'_{k,r}: |A delta B| = 2r and A\B, B\A completely joined.
  kMoveUnion,    // union of F_k^i over 1 <= i <= k.
};

std::string_view variant_name(TokenVariant v);

struct TokenProvenance {
  TokenVariant variant = TokenVariant::kGeneralized;
  int k = 0;
  // m for kGeneralized, r for kMatching/kAllEdges, k for kMoveUnion.
  int moves = 0;

  bool operator==(const TokenProvenance&) const = default;
};

// Vertex i of `graph` is the i-th k-subset of the host's vertices in
// lexicographic order; `labels[i]` is that subset.
struct TokenGraph {
  Graph graph;
  std::vector<TokenConfig> labels;
  TokenProvenance provenance;
  int host_order = 0;

  // Vertex index of a config (sorted, size k). Throws ParameterError when
  // the config is malformed.
  int index_of(const TokenConfig& config) const;
};

// True iff a bijection A -> B exists with exactly m pairs (a, b) that are
// edges of `host` and the remaining k - m pairs fixed points. A == B is
// never adjacent. Throws ParameterError on size mismatch, unsorted or
// out-of-range configs, or m outside [1, k].
bool config_adjacent(const Graph& host, const TokenConfig& a, const TokenConfig& b, int m);

// F_k^m(host). Requires 1 <= m <= k <= n.
TokenGraph build_token_graph(const Graph& host, int k, int m);

enum class VariantKind { kMatching, kAllEdges };

// F_{k,r}(host) or F'_{k,r}(host). Requires 1 <= r <= k <= n.
TokenGraph build_variant(const Graph& host, int k, int r, VariantKind kind);

// Union over i = 1..k of the arcs of F_k^i(host).
TokenGraph build_move_union(const Graph& host, int k);

// Degree of config {v, w} in F_2^2(host) from the closed form: with
// c = |N(v) & N(w)|, d(v)d(w) - c(c+1)/2, minus one more when v ~ w.
int predicted_degree_f22(const Graph& host, int v, int w);

// Whether the complement of `host` avoids every K_{a+b} and K_{a,b} with
// a + b > k, i.e. whether build_move_union(host, k) is complete. This is
// the fast form: no (k+1)-subset S with host[S] disconnected.
bool arcs_union_complete_condition(const Graph& host, int k);

// Same predicate by brute force over disjoint vertex-set pairs (X, Y),
// |X| + |Y| = k + 1, looking for a complete bipartite or complete subgraph
// of the complement.
bool arcs_union_complete_condition_literal(const Graph& host, int k);

// One config per line, vertices comma separated, in vertex order.
std::string labels_encode(const std::vector<TokenConfig>& labels);
std::vector<TokenConfig> labels_decode(std::string_view text);
std::string config_to_string(const TokenConfig& config);

}  // namespace tokgraph

#endif  // TOKGRAPH_TOKEN_GRAPH_H_
