#ifndef TOKGRAPH_CANONICAL_H_
#define TOKGRAPH_CANONICAL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "tokgraph/budget.h"
#include "tokgraph/graph.h"
#include "tokgraph/permutation.h"
#include "tokgraph/token_graph.h"

namespace tokgraph {

// `ordering[i]` is the input vertex placed at canonical position i. `bits`
// packs the upper triangle of the relabelled adjacency matrix row by row
// ((0,1), (0,2), .., (1,2), ..), 64 bits per word. Two graphs are
// isomorphic iff their forms compare equal.
struct CanonicalForm {
  int n = 0;
  std::vector<int> ordering;
  std::vector<std::uint64_t> bits;

  // Equality ignores `ordering`.
  bool operator==(const CanonicalForm& o) const { return n == o.n && bits == o.bits; }

  // The canonical relabelling as a graph.
  Graph graph() const;
};

CanonicalForm canonical_form(const Graph& g, const Budget& budget = {});

struct IsoResult {
  bool isomorphic = false;
  // mapping[v] is the vertex of h that v in g goes to.
  std::optional<Permutation> mapping;
};

IsoResult is_isomorphic(const Graph& g, const Graph& h, const Budget& budget = {});

// Generators found by the canonical search, each validated as an
// automorphism, together with the exact group order.
PermGroup automorphism_group(const Graph& g, const Budget& budget = {});

// Both in one search.
struct CanonicalSearchResult {
  CanonicalForm form;
  PermGroup group;
  std::uint64_t nodes = 0;
};

CanonicalSearchResult canonical_search(const Graph& g, const Budget& budget = {});

// The map A -> f(A) on the configs of `t`. Throws ParameterError when f is
// not an automorphism of `host` or the sizes disagree, and InternalError if
// the result does not preserve the edges of t.
Permutation induced_token_automorphism(const Graph& host, const Permutation& f, const TokenGraph& t);

}  // namespace tokgraph

#endif  // TOKGRAPH_CANONICAL_H_
