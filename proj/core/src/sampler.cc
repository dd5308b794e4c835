#include "tokgraph/errors.h"
#include "tokgraph/harness.h"
#include "tokgraph/invariants.h"

namespace tokgraph::harness {

std::uint64_t check_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return seed ^ h;
}

Graph random_graph(Rng& rng, int n_lo, int n_hi, GraphClass cls) {
  if (n_lo < 1 || n_hi < n_lo) throw ParameterError("n", "empty or invalid range");
  static constexpr double kProbabilities[] = {0.3, 0.5, 0.7};
  while (true) {
    const int n = rng.uniform_int(n_lo, n_hi);
    const double p = kProbabilities[rng.uniform_int(0, 2)];
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform_real() < p) b.add_edge(u, v);
    Graph g = std::move(b).build();
    if (cls == GraphClass::kAny) return g;
    if (!is_connected(g)) continue;
    if (cls == GraphClass::kConnected) return g;
    const bool bip = bipartiteness(g).bipartite;
    if (bip == (cls == GraphClass::kConnectedBipartite)) return g;
  }
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace tokgraph::harness
