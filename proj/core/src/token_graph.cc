#include "tokgraph/token_graph.h"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "tokgraph/combinatorics.h"
#include "tokgraph/errors.h"

namespace tokgraph {
namespace {

void validate_config(const Graph& host, const TokenConfig& c, std::string_view field) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= host.order())
      throw ParameterError(std::string(field), "vertex " + std::to_string(c[i]) + " out of range");
    if (i > 0 && c[i - 1] >= c[i])
      throw ParameterError(std::string(field), "config must be strictly increasing");
  }
}

void validate_sizes(const Graph& host, int k, int moves, std::string_view moves_field) {
  if (k < 1) throw ParameterError("k", "must be >= 1");
  if (k > host.order())
    throw ParameterError("k", "k=" + std::to_string(k) + " exceeds vertex count " +
                                  std::to_string(host.order()));
  if (moves < 1 || moves > k)
    throw ParameterError(std::string(moves_field), "must lie in [1, k]");
}

// Kuhn's augmenting-path matching: does a perfect matching exist between
// `left` and `right` (equal sizes) using only host edges?
bool perfect_edge_matching(const Graph& host, const std::vector<int>& left,
                           const std::vector<int>& right) {
  const int size = static_cast<int>(left.size());
  std::vector<int> match_of_right(size, -1);
  std::vector<char> visited;
  auto augment = [&](auto&& self, int l) -> bool {
    for (int r = 0; r < size; ++r) {
      if (visited[r] || !host.adjacent(left[l], right[r])) continue;
      visited[r] = 1;
      if (match_of_right[r] < 0 || self(self, match_of_right[r])) {
        match_of_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < size; ++l) {
    visited.assign(size, 0);
    if (!augment(augment, l)) return false;
  }
  return true;
}

struct SplitSets {
  std::vector<int> only_a;
  std::vector<int> only_b;
  std::vector<int> common;
};

SplitSets split(const TokenConfig& a, const TokenConfig& b) {
  SplitSets s;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s.only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(s.only_b));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s.common));
  return s;
}

// Adjacency without argument validation; a != b assumed sorted and sized k.
bool adjacent_unchecked(const Graph& host, const TokenConfig& a, const TokenConfig& b, int m) {
  // Cheap rejection on |A \ B| before building any sets.
  int moved_out = 0;
  for (std::size_t i = 0, j = 0; i < a.size(); ++i) {
    while (j < b.size() && b[j] < a[i]) ++j;
    moved_out += j == b.size() || b[j] != a[i];
  }
  if (moved_out == 0 || moved_out > m) return false;
  const SplitSets s = split(a, b);
  // Tokens on common vertices that also move: m - moved_out of them. Every
  // choice of which common vertices stay fixed is tried.
  const int extra = m - moved_out;
  const int common = static_cast<int>(s.common.size());
  if (extra > common) return false;
  for (const auto& pick : k_subsets(common, extra)) {
    std::vector<int> left = s.only_a;
    std::vector<int> right = s.only_b;
    for (int idx : pick) {
      left.push_back(s.common[idx]);
      right.push_back(s.common[idx]);
    }
    if (perfect_edge_matching(host, left, right)) return true;
  }
  return false;
}

template <typename Pred>
TokenGraph build_with(const Graph& host, int k, TokenProvenance provenance, Pred&& adjacent) {
  TokenGraph t;
  t.labels = k_subsets(host.order(), k);
  t.provenance = provenance;
  t.host_order = host.order();
  const int count = static_cast<int>(t.labels.size());
  GraphBuilder b(count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (adjacent(t.labels[i], t.labels[j])) b.add_edge(i, j);
  t.graph = std::move(b).build();
  return t;
}

// Lexicographic rank of k-subsets of {0..n-1} with a cached binomial table.
class SubsetRanker {
 public:
  SubsetRanker(int n, int k) : n_(n), k_(k), table_((n + 1) * (k + 1), 0) {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= std::min(a, k); ++b)
        table_[a * (k + 1) + b] = b == 0 || b == a ? 1 : choose(a - 1, b - 1) + choose(a - 1, b);
  }

  int rank(const TokenConfig& c) const {
    std::int64_t r = 0;
    int prev = -1;
    for (int i = 0; i < k_; ++i) {
      for (int x = prev + 1; x < c[i]; ++x) r += choose(n_ - 1 - x, k_ - 1 - i);
      prev = c[i];
    }
    return static_cast<int>(r);
  }

 private:
  std::int64_t choose(int a, int b) const { return b < 0 || b > a ? 0 : table_[a * (k_ + 1) + b]; }

  int n_;
  int k_;
  std::vector<std::int64_t> table_;
};

// F_k^m by neighbour generation: for each config, pick m tokens and send
// them along host edges to distinct vertices not held by a fixed token.
TokenGraph build_generalized(const Graph& host, int k, int m) {
  TokenGraph t;
  t.labels = k_subsets(host.order(), k);
  t.provenance = {TokenVariant::kGeneralized, k, m};
  t.host_order = host.order();
  const SubsetRanker ranker(host.order(), k);
  const int count = static_cast<int>(t.labels.size());
  GraphBuilder b(count);

  std::vector<char> fixed(host.order(), 0);
  std::vector<char> taken(host.order(), 0);
  std::vector<int> movers;
  std::vector<int> targets;
  for (int i = 0; i < count; ++i) {
    const TokenConfig& a = t.labels[i];
    for (const auto& pick : k_subsets(k, m)) {
      std::fill(fixed.begin(), fixed.end(), 0);
      for (int v : a) fixed[v] = 1;
      movers.clear();
      for (int idx : pick) {
        movers.push_back(a[idx]);
        fixed[a[idx]] = 0;
      }
      targets.assign(m, -1);
      auto place = [&](auto&& self, int j) -> void {
        if (j == m) {
          TokenConfig next;
          next.reserve(k);
          for (int v : a)
            if (fixed[v]) next.push_back(v);
          next.insert(next.end(), targets.begin(), targets.end());
          std::sort(next.begin(), next.end());
          if (next != a) {
            const int other = ranker.rank(next);
            if (other > i) b.add_edge(i, other);
          }
          return;
        }
        host.neighbors(movers[j]).for_each([&](int w) {
          if (fixed[w] || taken[w]) return;
          taken[w] = 1;
          targets[j] = w;
          self(self, j + 1);
          taken[w] = 0;
        });
      };
      place(place, 0);
    }
  }
  t.graph = std::move(b).build();
  return t;
}

}  // namespace

std::string_view variant_name(TokenVariant v) {
  switch (v) {
    case TokenVariant::kGeneralized: return "generalized";
    case TokenVariant::kMatching: return "fkr";
    case TokenVariant::kAllEdges: return "fkr-prime";
    case TokenVariant::kMoveUnion: return "union";
  }
  return "unknown";
}

int TokenGraph::index_of(const TokenConfig& config) const {
  if (static_cast<int>(config.size()) != provenance.k)
    throw ParameterError("config", "size must equal k=" + std::to_string(provenance.k));
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config[i] < 0 || config[i] >= host_order || (i > 0 && config[i - 1] >= config[i]))
      throw ParameterError("config", "must be strictly increasing vertices of the host");
  }
  return static_cast<int>(subset_rank(host_order, config));
}

bool config_adjacent(const Graph& host, const TokenConfig& a, const TokenConfig& b, int m) {
  if (a.size() != b.size()) throw ParameterError("B", "configs must have equal size");
  const int k = static_cast<int>(a.size());
  if (k < 1) throw ParameterError("A", "config must be non-empty");
  if (m < 1 || m > k) throw ParameterError("m", "must lie in [1, k]");
  validate_config(host, a, "A");
  validate_config(host, b, "B");
  if (a == b) return false;
  return adjacent_unchecked(host, a, b, m);
}

TokenGraph build_token_graph(const Graph& host, int k, int m) {
  validate_sizes(host, k, m, "m");
  return build_generalized(host, k, m);
}

TokenGraph build_variant(const Graph& host, int k, int r, VariantKind kind) {
  validate_sizes(host, k, r, "r");
  const TokenVariant variant =
      kind == VariantKind::kMatching ? TokenVariant::kMatching : TokenVariant::kAllEdges;
  return build_with(host, k, {variant, k, r}, [&](const TokenConfig& a, const TokenConfig& b) {
    const SplitSets s = split(a, b);
    if (static_cast<int>(s.only_a.size()) != r) return false;
    if (kind == VariantKind::kMatching) return perfect_edge_matching(host, s.only_a, s.only_b);
    for (int x : s.only_a)
      for (int y : s.only_b)
        if (!host.adjacent(x, y)) return false;
    return true;
  });
}

TokenGraph build_move_union(const Graph& host, int k) {
  validate_sizes(host, k, k, "k");
  return build_with(host, k, {TokenVariant::kMoveUnion, k, k},
                    [&](const TokenConfig& a, const TokenConfig& b) {
                      for (int i = 1; i <= k; ++i)
                        if (adjacent_unchecked(host, a, b, i)) return true;
                      return false;
                    });
}

int predicted_degree_f22(const Graph& host, int v, int w) {
  const int n = host.order();
  if (v < 0 || v >= n) throw ParameterError("v", "out of range");
  if (w < 0 || w >= n) throw ParameterError("w", "out of range");
  if (v == w) throw ParameterError("w", "must differ from v");
  const int c = host.neighbors(v).intersection_count(host.neighbors(w));
  int d = host.degree(v) * host.degree(w) - c * (c + 1) / 2;
  if (host.adjacent(v, w)) d -= 1;
  return d;
}

bool arcs_union_complete_condition(const Graph& host, int k) {
  const int n = host.order();
  if (k < 1 || k > n) throw ParameterError("k", "must lie in [1, n]");
  for (const auto& subset : k_subsets(n, k + 1)) {
    // BFS inside host[subset] from its first vertex.
    VertexSet inside(n);
    for (int v : subset) inside.insert(v);
    VertexSet reached(n);
    std::vector<int> stack{subset.front()};
    reached.insert(subset.front());
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      (host.neighbors(u) & inside).for_each([&](int x) {
        if (!reached.contains(x)) {
          reached.insert(x);
          stack.push_back(x);
        }
      });
    }
    if (reached.count() != static_cast<int>(subset.size())) return false;
  }
  return true;
}

bool arcs_union_complete_condition_literal(const Graph& host, int k) {
  const int n = host.order();
  if (k < 1 || k > n) throw ParameterError("k", "must lie in [1, n]");
  const int total = k + 1;
  for (const auto& subset : k_subsets(n, total)) {
    // Complete subgraph K_{total} of the complement.
    bool independent = true;
    for (int i = 0; i < total && independent; ++i)
      for (int j = i + 1; j < total; ++j)
        if (host.adjacent(subset[i], subset[j])) {
          independent = false;
          break;
        }
    if (independent) return false;
    // Complete bipartite K_{|X|,|Y|} of the complement: every split into
    // non-empty X (holding subset[0]) and Y.
    for (unsigned mask = 0; mask + 1 < (1u << (total - 1)); ++mask) {
      std::vector<int> x{subset[0]};
      std::vector<int> y;
      for (int i = 1; i < total; ++i) ((mask >> (i - 1)) & 1u ? x : y).push_back(subset[i]);
      bool joined_in_complement = true;
      for (int a : x) {
        for (int b : y)
          if (host.adjacent(a, b)) {
            joined_in_complement = false;
            break;
          }
        if (!joined_in_complement) break;
      }
      if (joined_in_complement) return false;
    }
  }
  return true;
}

std::string config_to_string(const TokenConfig& config) {
  std::string out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(config[i]);
  }
  return out;
}

std::string labels_encode(const std::vector<TokenConfig>& labels) {
  std::string out;
  for (const auto& c : labels) {
    out += config_to_string(c);
    out += '\n';
  }
  return out;
}

std::vector<TokenConfig> labels_decode(std::string_view text) {
  std::vector<TokenConfig> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (!line.empty()) {
      TokenConfig c;
      std::size_t i = 0;
      while (i <= line.size()) {
        std::size_t comma = line.find(',', i);
        if (comma == std::string_view::npos) comma = line.size();
        const std::string_view field = line.substr(i, comma - i);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
          throw ParseError(pos + i, "expected a vertex index");
        if (!c.empty() && c.back() >= value) throw ParseError(pos + i, "config must be strictly increasing");
        c.push_back(value);
        i = comma + 1;
      }
      out.push_back(std::move(c));
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace tokgraph
