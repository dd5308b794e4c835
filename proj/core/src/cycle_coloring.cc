#include <algorithm>
#include <set>

#include "tokgraph/errors.h"
#include "tokgraph/invariants.h"

namespace tokgraph {
namespace {

// Colour of the 1-based pair {p, q} under the chosen rule.
int pair_color(int n, CycleColoringVariant variant, int p, int q) {
  int x = std::min(p, q);
  int y = std::max(p, q);
  if (variant == CycleColoringVariant::kC) {
    // n counts as smaller than 1.
    if (y == n) std::swap(x, y);
    return x % 3;
  }
  if (x == 1 && y < n) return 2;
  if (x == 2) return 1;
  if (x == 1 && y == n) return n % 3;
  return x % 3;  // x >= 3
}

}  // namespace

CycleColoring cycle_coloring(int n, CycleColoringVariant variant) {
  if (n < 6 || n % 2 != 0) throw ParameterError("n", "must be even and >= 6");
  if (variant == CycleColoringVariant::kC && n % 3 == 1)
    throw ParameterError("variant", "colouring c requires n mod 3 != 1");
  if (variant == CycleColoringVariant::kCPrime && n % 3 != 1)
    throw ParameterError("variant", "colouring c' requires n mod 3 == 1");
  CycleColoring out{n, variant, {}};
  // The non-bipartite component consists of the pairs at odd cyclic
  // distance, i.e. with endpoints of different parity.
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      if ((q - p) % 2 == 1) out.assignment.push_back({{p - 1, q - 1}, pair_color(n, variant, p, q)});
  return out;
}

ColoringValidation validate_cycle_coloring(const CycleColoring& coloring) {
  const Graph cycle = cycle_graph(coloring.n);
  const TokenGraph t = build_token_graph(cycle, 2, 2);
  std::vector<int> color(t.graph.order(), -1);
  std::set<int> used;
  for (const auto& [config, c] : coloring.assignment) {
    color[t.index_of(config)] = c;
    used.insert(c);
  }
  ColoringValidation v;
  v.colors_used = static_cast<int>(used.size());
  for (auto [a, b] : t.graph.edges()) {
    if (color[a] < 0 || color[b] < 0) continue;
    if (color[a] == color[b]) v.conflicts.emplace_back(t.labels[a], t.labels[b]);
  }
  v.proper = v.conflicts.empty();
  return v;
}

}  // namespace tokgraph
