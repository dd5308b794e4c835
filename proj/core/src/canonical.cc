#include "tokgraph/canonical.h"

#include <algorithm>
#include <climits>
#include <numeric>

#include "tokgraph/errors.h"

namespace tokgraph {
namespace {

using Partition = std::vector<std::vector<int>>;

// Refines to the coarsest equitable partition below `cells`. Every cell
// stays sorted; a split cell is replaced in place by its parts ordered by
// ascending neighbour count into the splitter.
void refine(const Graph& g, Partition& cells) {
  const int n = g.order();
  std::vector<int> count(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if (static_cast<int>(cells.size()) == n) return;
      VertexSet splitter(n);
      for (int v : cells[s]) splitter.insert(v);
      Partition next;
      next.reserve(cells.size() + 4);
      bool split = false;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        for (int v : cell) count[v] = g.neighbors(v).intersection_count(splitter);
        std::vector<int> sorted = cell;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](int a, int b) { return count[a] < count[b]; });
        if (count[sorted.front()] == count[sorted.back()]) {
          next.push_back(std::move(cell));
          continue;
        }
        split = true;
        std::size_t lo = 0;
        while (lo < sorted.size()) {
          std::size_t hi = lo;
          while (hi < sorted.size() && count[sorted[hi]] == count[sorted[lo]]) ++hi;
          std::vector<int> part(sorted.begin() + lo, sorted.begin() + hi);
          std::sort(part.begin(), part.end());
          next.push_back(std::move(part));
          lo = hi;
        }
      }
      cells = std::move(next);
      changed = changed || split;
    }
  }
}

std::vector<std::uint64_t> certificate(const Graph& g, const std::vector<int>& lab) {
  const int n = g.order();
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint64_t> bits((total + 63) / 64, 0);
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if (g.adjacent(lab[i], lab[j])) bits[pos >> 6] |= std::uint64_t{1} << (63 - (pos & 63));
  return bits;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller index as root so find() yields the orbit minimum.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

struct Leaf {
  std::vector<int> lab;
  std::vector<std::uint64_t> cert;
  std::vector<int> path;
};

class Search {
 public:
  Search(const Graph& g, const Budget& budget) : g_(g), n_(g.order()), meter_(budget, "canonical search") {}

  void run() {
    Partition cells;
    if (n_ > 0) {
      // Start from the degree partition.
      std::vector<int> verts(n_);
      std::iota(verts.begin(), verts.end(), 0);
      std::stable_sort(verts.begin(), verts.end(),
                       [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
      std::size_t lo = 0;
      while (lo < verts.size()) {
        std::size_t hi = lo;
        while (hi < verts.size() && g_.degree(verts[hi]) == g_.degree(verts[lo])) ++hi;
        std::vector<int> part(verts.begin() + lo, verts.begin() + hi);
        std::sort(part.begin(), part.end());
        cells.push_back(std::move(part));
        lo = hi;
      }
      refine(g_, cells);
    }
    std::vector<int> path;
    visit(cells, path);
  }

  const Leaf& best() const { return *best_; }
  const Leaf& first() const { return *first_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t nodes() const { return meter_.nodes(); }

  // Orbits of the subgroup generated by the generators that fix every
  // vertex of `path`.
  UnionFind orbits(const std::vector<int>& path, std::size_t prefix) const {
    UnionFind uf(n_);
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (std::size_t i = 0; i < prefix && fixes; ++i) fixes = gen[path[i]] == path[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    }
    return uf;
  }

 private:
  // Returns the depth at which the search should resume; INT_MAX means
  // carry on normally.
  int visit(const Partition& cells, std::vector<int>& path) {
    meter_.tick();
    const int depth = static_cast<int>(path.size());
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) return leaf(cells, path);

    const std::vector<int> candidates = cells[target];
    for (int v : candidates) {
      if (v != candidates.front()) {
        UnionFind uf = orbits(path, path.size());
        if (uf.find(v) != v) continue;
      }
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      path.push_back(v);
      const int resume = visit(child, path);
      path.pop_back();
      if (resume < depth) return resume;
    }
    return INT_MAX;
  }

  int leaf(const Partition& cells, const std::vector<int>& path) {
    Leaf l;
    l.lab.reserve(n_);
    for (const auto& c : cells) l.lab.push_back(c.front());
    l.cert = certificate(g_, l.lab);
    l.path = path;
    if (!first_) {
      first_ = l;
      best_ = std::move(l);
      return INT_MAX;
    }
    if (l.cert == first_->cert) {
      record(*first_, l);
      return common_prefix(first_->path, l.path);
    }
    if (l.cert == best_->cert) {
      record(*best_, l);
      return common_prefix(best_->path, l.path);
    }
    if (l.cert > best_->cert) best_ = std::move(l);
    return INT_MAX;
  }

  void record(const Leaf& from, const Leaf& to) {
    std::vector<int> image(n_);
    for (int i = 0; i < n_; ++i) image[from.lab[i]] = to.lab[i];
    Permutation p(std::move(image));
    if (p.is_identity()) return;
    if (!is_automorphism(g_, p))
      throw InternalError("canonical search produced a non-automorphism " + p.to_string());
    gens_.push_back(std::move(p));
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int i = 0;
    while (i < static_cast<int>(a.size()) && i < static_cast<int>(b.size()) && a[i] == b[i]) ++i;
    return i;
  }

  const Graph& g_;
  int n_;
  BudgetMeter meter_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<Permutation> gens_;
};

}  // namespace

Graph CanonicalForm::graph() const {
  GraphBuilder b(n);
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if ((bits[pos >> 6] >> (63 - (pos & 63))) & 1u) b.add_edge(i, j);
  return std::move(b).build();
}

CanonicalSearchResult canonical_search(const Graph& g, const Budget& budget) {
  const int n = g.order();
  CanonicalSearchResult out;
  out.form.n = n;
  if (n == 0) {
    out.group = PermGroup(0, {});
    return out;
  }
  Search search(g, budget);
  search.run();
  out.form.ordering = search.best().lab;
  out.form.bits = search.best().cert;
  out.nodes = search.nodes();

  // Order from the search: product over the first path of the orbit of the
  // chosen vertex under the generators fixing the earlier choices.
  const auto& path = search.first().path;
  BigInt search_order = 1;
  for (std::size_t i = 0; i < path.size(); ++i) {
    UnionFind uf = search.orbits(path, i);
    const int root = uf.find(path[i]);
    int orbit = 0;
    for (int v = 0; v < n; ++v) orbit += uf.find(v) == root;
    search_order *= orbit;
  }
  out.group = PermGroup(n, search.generators());
  if (out.group.order() != search_order)
    throw InternalError("automorphism group order mismatch: search " + to_decimal(search_order) +
                        ", stabiliser chain " + to_decimal(out.group.order()));
  return out;
}

CanonicalForm canonical_form(const Graph& g, const Budget& budget) {
  return canonical_search(g, budget).form;
}

PermGroup automorphism_group(const Graph& g, const Budget& budget) {
  return canonical_search(g, budget).group;
}

IsoResult is_isomorphic(const Graph& g, const Graph& h, const Budget& budget) {
  IsoResult r;
  if (g.order() != h.order() || g.size() != h.size()) return r;
  const CanonicalForm fg = canonical_form(g, budget);
  const CanonicalForm fh = canonical_form(h, budget);
  if (!(fg == fh)) return r;
  std::vector<int> image(g.order());
  for (int i = 0; i < g.order(); ++i) image[fg.ordering[i]] = fh.ordering[i];
  Permutation phi(std::move(image));
  for (auto [u, v] : g.edges())
    if (!h.adjacent(phi[u], phi[v])) throw InternalError("isomorphism witness fails on an edge");
  r.isomorphic = true;
  r.mapping = std::move(phi);
  return r;
}

Permutation induced_token_automorphism(const Graph& host, const Permutation& f, const TokenGraph& t) {
  if (f.degree() != host.order() || t.host_order != host.order())
    throw ParameterError("f", "degree does not match the host graph");
  if (!is_automorphism(host, f)) throw ParameterError("f", "not an automorphism of the host graph");
  std::vector<int> image(t.labels.size());
  TokenConfig mapped;
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    mapped.clear();
    for (int v : t.labels[i]) mapped.push_back(f[v]);
    std::sort(mapped.begin(), mapped.end());
    image[i] = t.index_of(mapped);
  }
  Permutation phi(std::move(image));
  if (!is_automorphism(t.graph, phi)) throw InternalError("induced map is not a token graph automorphism");
  return phi;
}

}  // namespace tokgraph
