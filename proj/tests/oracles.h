// Brute-force reference implementations used only by the tests. Each one is
// written directly from the definition and shares no code with the library.
#ifndef TOKGRAPH_TESTS_ORACLES_H_
#define TOKGRAPH_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "tokgraph/graph.h"

namespace oracle {

using tokgraph::Graph;

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= 1u << v;
  return adj;
}

inline bool independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if ((s >> v & 1) && (adj[v] & s)) return false;
  return true;
}

inline bool clique(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if ((s >> v & 1) && ((adj[v] | 1u << v) & s) != s) return false;
  return true;
}

inline bool dominating(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  const std::uint32_t all = adj.empty() ? 0 : (1u << adj.size()) - 1;
  std::uint32_t covered = s;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    if (s >> v & 1) covered |= adj[v];
  return covered == all;
}

inline int alpha(const Graph& g) {
  const auto adj = adjacency_masks(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if (independent(adj, s)) best = std::max(best, std::popcount(s));
  return best;
}

inline int omega(const Graph& g) {
  const auto adj = adjacency_masks(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if (clique(adj, s)) best = std::max(best, std::popcount(s));
  return best;
}

inline int gamma(const Graph& g) {
  const auto adj = adjacency_masks(g);
  int best = g.order();
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if (dominating(adj, s)) best = std::min(best, std::popcount(s));
  return best;
}

inline int idom(const Graph& g) {
  const auto adj = adjacency_masks(g);
  int best = g.order();
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if (independent(adj, s) && dominating(adj, s)) best = std::min(best, std::popcount(s));
  return best;
}

// Smallest c such that some assignment V -> {0..c-1} is proper, by trying
// every assignment.
inline int chi(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto edges = g.edges();
  for (int c = 1; c <= n; ++c) {
    std::vector<int> color(n, 0);
    while (true) {
      bool proper = true;
      for (auto [u, v] : edges)
        if (color[u] == color[v]) {
          proper = false;
          break;
        }
      if (proper) return c;
      int i = 0;
      while (i < n && ++color[i] == c) color[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// Configs A, B (sorted k-subsets) are adjacent in F_k^m(G) iff some
// bijection A -> B sends exactly m tokens along edges and fixes the rest.
inline bool token_adjacent(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, int m) {
  if (a == b) return false;
  std::vector<int> image = b;
  std::sort(image.begin(), image.end());
  do {
    int moved = 0;
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      if (a[i] == image[i]) continue;
      if (!g.adjacent(a[i], image[i])) ok = false;
      ++moved;
    }
    if (ok && moved == m) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

// Token graph edges for m = 1 from the textbook rule: |A delta B| = 2 and
// the two differing vertices are adjacent.
inline bool one_move_adjacent(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  return only_a.size() == 1 && only_b.size() == 1 && g.adjacent(only_a[0], only_b[0]);
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> c;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) c.push_back(v);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of vertex permutations preserving adjacency, by enumeration.
inline std::uint64_t automorphism_count(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  tokgraph::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle

#endif  // TOKGRAPH_TESTS_ORACLES_H_
