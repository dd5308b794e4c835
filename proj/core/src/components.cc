#include <algorithm>
#include <queue>

#include "tokgraph/errors.h"
#include "tokgraph/invariants.h"

namespace tokgraph {

void BudgetMeter::exceeded(const char* which) const {
  throw ResourceError(what_ + ": " + which + " exceeded after " + std::to_string(nodes_) + " nodes");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      g.neighbors(u).for_each([&](int v) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

BipartitenessCertificate bipartiteness(const Graph& g) {
  const int n = g.order();
  BipartitenessCertificate cert;
  cert.side.assign(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (cert.side[s] >= 0) continue;
    cert.side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
        if (cert.side[v] < 0) {
          cert.side[v] = 1 - cert.side[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (cert.side[v] == cert.side[u]) {
          // Both BFS-tree paths climb to their lowest common ancestor; the
          // edge (u, v) closes an odd cycle.
          std::vector<int> up_u{u};
          std::vector<int> up_v{v};
          int a = u;
          int b = v;
          while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
          while (a != b) {
            up_u.push_back(a = parent[a]);
            up_v.push_back(b = parent[b]);
          }
          up_v.pop_back();  // common ancestor already in up_u
          // ancestor -> ... -> u, then v -> ... -> child of the ancestor
          std::vector<int> cycle(up_u.rbegin(), up_u.rend());
          cycle.insert(cycle.end(), up_v.begin(), up_v.end());
          cert.bipartite = false;
          cert.side.clear();
          cert.odd_cycle = std::move(cycle);
          return cert;
        }
      }
    }
  }
  return cert;
}

bool validate(const Graph& g, const BipartitenessCertificate& cert) {
  const int n = g.order();
  if (cert.bipartite) {
    if (static_cast<int>(cert.side.size()) != n) return false;
    for (int s : cert.side)
      if (s != 0 && s != 1) return false;
    for (auto [u, v] : g.edges())
      if (cert.side[u] == cert.side[v]) return false;
    return true;
  }
  const auto& c = cert.odd_cycle;
  const int len = static_cast<int>(c.size());
  if (len < 3 || len % 2 == 0) return false;
  std::vector<char> seen(n, 0);
  for (int v : c) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < len; ++i)
    if (!g.adjacent(c[i], c[(i + 1) % len])) return false;
  return true;
}

std::string_view witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kIndependentSet: return "independent_set";
    case WitnessKind::kClique: return "clique";
    case WitnessKind::kColoring: return "coloring";
    case WitnessKind::kDominatingSet: return "dominating_set";
    case WitnessKind::kIndependentDominatingSet: return "independent_dominating_set";
  }
  return "unknown";
}

bool validate(const Graph& g, const InvariantWitness& w) {
  const int n = g.order();
  if (w.kind == WitnessKind::kColoring) {
    if (static_cast<int>(w.colors.size()) != n) return false;
    std::vector<char> used(std::max(w.value, 0), 0);
    for (int c : w.colors) {
      if (c < 0 || c >= w.value) return false;
      used[c] = 1;
    }
    if (std::count(used.begin(), used.end(), 1) != w.value) return false;
    for (auto [u, v] : g.edges())
      if (w.colors[u] == w.colors[v]) return false;
    return true;
  }
  if (static_cast<int>(w.vertices.size()) != w.value) return false;
  VertexSet set(n);
  for (int v : w.vertices) {
    if (v < 0 || v >= n || set.contains(v)) return false;
    set.insert(v);
  }
  const bool need_independent =
      w.kind == WitnessKind::kIndependentSet || w.kind == WitnessKind::kIndependentDominatingSet;
  if (need_independent) {
    for (int v : w.vertices)
      if (g.neighbors(v).intersects(set)) return false;
  }
  if (w.kind == WitnessKind::kClique) {
    for (int v : w.vertices)
      if (g.neighbors(v).intersection_count(set) != w.value - 1) return false;
  }
  if (w.kind == WitnessKind::kDominatingSet || w.kind == WitnessKind::kIndependentDominatingSet) {
    for (int v = 0; v < n; ++v)
      if (!set.contains(v) && !g.neighbors(v).intersects(set)) return false;
  }
  return true;
}

}  // namespace tokgraph
