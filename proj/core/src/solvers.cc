#include <algorithm>
#include <numeric>

#include "tokgraph/errors.h"
#include "tokgraph/invariants.h"

namespace tokgraph {
namespace {

// Maximum clique by branch and bound with a greedy-colouring bound
// (sequential colouring of the candidate set; a colour class contributes at
// most one clique vertex).
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const std::vector<VertexSet>& adj, const Budget& budget)
      : adj_(adj), n_(static_cast<int>(adj.size())), meter_(budget, "clique search") {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    best_ = {0};
    std::vector<int> current;
    expand(current, VertexSet::Full(n_));
    return best_;
  }

 private:
  void expand(std::vector<int>& current, VertexSet candidates) {
    meter_.tick();
    std::vector<int> order;
    std::vector<int> bound;
    color_sort(candidates, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      const int v = order[i];
      current.push_back(v);
      VertexSet next = candidates & adj_[v];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.erase(v);
    }
  }

  // Vertices of `candidates` grouped by greedy colour class; bound[i] is the
  // colour number (1-based) of order[i], non-decreasing.
  void color_sort(const VertexSet& candidates, std::vector<int>& order, std::vector<int>& bound) const {
    VertexSet uncolored = candidates;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet available = uncolored;
      while (!available.empty()) {
        const int v = available.first();
        available.erase(v);
        available -= adj_[v];
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  const std::vector<VertexSet>& adj_;
  int n_;
  BudgetMeter meter_;
  std::vector<int> best_;
};

// Runs the clique search on `g` after renumbering vertices by non-increasing
// degree (ties by index), then maps the result back.
std::vector<int> max_clique_vertices(const Graph& g, const Budget& budget) {
  const int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (auto [u, v] : g.edges()) {
    adj[position[u]].insert(position[v]);
    adj[position[v]].insert(position[u]);
  }
  std::vector<int> clique = MaxCliqueSearch(adj, budget).run();
  for (int& v : clique) v = order[v];
  std::sort(clique.begin(), clique.end());
  return clique;
}

// ---------------------------------------------------------------------------
// Colouring.

std::vector<int> dsatur_greedy(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<VertexSet> seen(n, VertexSet(n + 1));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      const int sat = seen[v].count();
      const int deg = g.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    int c = 0;
    while (seen[pick].contains(c)) ++c;
    color[pick] = c;
    g.neighbors(pick).for_each([&](int u) { seen[u].insert(c); });
  }
  return color;
}

// Exact k-colourability by DSATUR-ordered backtracking; the vertices of
// `clique` are precoloured 0..|clique|-1.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, BudgetMeter& meter) : g_(g), k_(k), meter_(meter) {}

  bool run(const std::vector<int>& clique, std::vector<int>& out) {
    const int n = g_.order();
    color_.assign(n, -1);
    forbidden_.assign(n, std::vector<int>(k_, 0));
    int used = 0;
    for (int v : clique) assign(v, used++);
    if (!solve(n - static_cast<int>(clique.size()), used)) return false;
    out = color_;
    return true;
  }

 private:
  void assign(int v, int c) {
    color_[v] = c;
    g_.neighbors(v).for_each([&](int u) { ++forbidden_[u][c]; });
  }
  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    g_.neighbors(v).for_each([&](int u) { --forbidden_[u][c]; });
  }

  bool solve(int remaining, int used) {
    meter_.tick();
    if (remaining == 0) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < k_; ++c) sat += forbidden_[v][c] > 0;
      if (sat == k_) return false;
      int deg = 0;
      g_.neighbors(v).for_each([&](int u) { deg += color_[u] < 0; });
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    // A fresh colour is interchangeable with any other unused one.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden_[pick][c]) continue;
      assign(pick, c);
      if (solve(remaining - 1, std::max(used, c + 1))) return true;
      unassign(pick);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  BudgetMeter& meter_;
  std::vector<int> color_;
  std::vector<std::vector<int>> forbidden_;
};

std::vector<int> chromatic_coloring_connected(const Graph& g, BudgetMeter& meter,
                                              const Budget& budget) {
  const int n = g.order();
  if (n == 0) return {};
  std::vector<int> best = dsatur_greedy(g);
  int upper = *std::max_element(best.begin(), best.end()) + 1;
  const std::vector<int> clique = max_clique_vertices(g, budget);
  const int lower = std::max<int>(1, static_cast<int>(clique.size()));
  for (int k = lower; k < upper; ++k) {
    std::vector<int> coloring;
    if (k == 2) {
      const auto cert = bipartiteness(g);
      if (cert.bipartite) return cert.side;
      continue;
    }
    if (ColoringSearch(g, k, meter).run(clique, coloring)) return coloring;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Domination.

class DominationSearch {
 public:
  DominationSearch(const Graph& g, bool independent, BudgetMeter& meter)
      : g_(g), n_(g.order()), independent_(independent), meter_(meter) {
    closed_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      VertexSet c = g.neighbors(v);
      c.insert(v);
      closed_.push_back(std::move(c));
    }
  }

  std::vector<int> run() {
    best_ = greedy();
    std::vector<int> chosen;
    search(VertexSet(n_), VertexSet::Full(n_), chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::vector<int> greedy() const {
    VertexSet dominated(n_);
    VertexSet allowed = VertexSet::Full(n_);
    std::vector<int> out;
    while (dominated.count() < n_) {
      const VertexSet undominated = VertexSet::Full(n_) - dominated;
      int pick = -1;
      int gain = -1;
      allowed.for_each([&](int w) {
        const int c = closed_[w].intersection_count(undominated);
        if (c > gain) {
          gain = c;
          pick = w;
        }
      });
      out.push_back(pick);
      dominated |= closed_[pick];
      if (independent_)
        allowed -= closed_[pick];
      else
        allowed.erase(pick);
    }
    return out;
  }

  // Fewest allowed vertices whose closed neighbourhoods could cover
  // `undominated`, by summing the largest coverage counts.
  int lower_bound(const VertexSet& undominated, const VertexSet& allowed, int need) const {
    std::vector<int> cover;
    allowed.for_each([&](int w) {
      const int c = closed_[w].intersection_count(undominated);
      if (c > 0) cover.push_back(c);
    });
    std::sort(cover.begin(), cover.end(), std::greater<>());
    int sum = 0;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      sum += cover[i];
      if (sum >= need) return static_cast<int>(i) + 1;
    }
    return n_ + 1;  // cannot be covered
  }

  void search(const VertexSet& dominated, const VertexSet& allowed, std::vector<int>& chosen) {
    meter_.tick();
    const VertexSet undominated = VertexSet::Full(n_) - dominated;
    const int need = undominated.count();
    if (need == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const int budget_left = static_cast<int>(best_.size()) - static_cast<int>(chosen.size());
    if (budget_left <= 1) return;  // a strictly better solution needs >= 1 more vertex
    if (lower_bound(undominated, allowed, need) >= budget_left) return;

    // Branch on the undominated vertex with the fewest possible dominators.
    int target = -1;
    int options = n_ + 1;
    undominated.for_each([&](int u) {
      const int c = closed_[u].intersection_count(allowed);
      if (c < options) {
        options = c;
        target = u;
      }
    });
    if (options == 0) return;

    std::vector<std::pair<int, int>> candidates;  // (-gain, vertex)
    (closed_[target] & allowed).for_each([&](int w) {
      candidates.emplace_back(-closed_[w].intersection_count(undominated), w);
    });
    std::sort(candidates.begin(), candidates.end());

    VertexSet remaining = allowed;
    for (auto [neg_gain, w] : candidates) {
      VertexSet next_allowed = remaining;
      if (independent_)
        next_allowed -= closed_[w];
      else
        next_allowed.erase(w);
      chosen.push_back(w);
      search(dominated | closed_[w], next_allowed, chosen);
      chosen.pop_back();
      // Every solution containing w has been covered.
      remaining.erase(w);
    }
  }

  const Graph& g_;
  int n_;
  bool independent_;
  BudgetMeter& meter_;
  std::vector<VertexSet> closed_;
  std::vector<int> best_;
};

InvariantWitness domination_impl(const Graph& g, bool independent, const Budget& budget) {
  BudgetMeter meter(budget, independent ? "independent domination search" : "domination search");
  InvariantWitness w;
  w.kind = independent ? WitnessKind::kIndependentDominatingSet : WitnessKind::kDominatingSet;
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    for (int v : DominationSearch(sub, independent, meter).run()) w.vertices.push_back(comp[v]);
  }
  std::sort(w.vertices.begin(), w.vertices.end());
  w.value = static_cast<int>(w.vertices.size());
  return w;
}

}  // namespace

InvariantWitness independence_number(const Graph& g, const Budget& budget) {
  InvariantWitness w;
  w.kind = WitnessKind::kIndependentSet;
  w.vertices = max_clique_vertices(complement(g), budget);
  w.value = static_cast<int>(w.vertices.size());
  return w;
}

InvariantWitness clique_number(const Graph& g, const Budget& budget) {
  InvariantWitness w = independence_number(complement(g), budget);
  w.kind = WitnessKind::kClique;
  return w;
}

InvariantWitness chromatic_number(const Graph& g, const Budget& budget) {
  BudgetMeter meter(budget, "colouring search");
  InvariantWitness w;
  w.kind = WitnessKind::kColoring;
  w.colors.assign(g.order(), 0);
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    const std::vector<int> coloring = chromatic_coloring_connected(sub, meter, budget);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      w.colors[comp[i]] = coloring[i];
      w.value = std::max(w.value, coloring[i] + 1);
    }
  }
  return w;
}

InvariantWitness domination_number(const Graph& g, const Budget& budget) {
  return domination_impl(g, false, budget);
}

InvariantWitness independent_domination_number(const Graph& g, const Budget& budget) {
  return domination_impl(g, true, budget);
}

}  // namespace tokgraph
