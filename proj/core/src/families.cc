#include <array>
#include <string>

#include "tokgraph/combinatorics.h"
#include "tokgraph/errors.h"
#include "tokgraph/graph.h"

namespace tokgraph {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kStar, "star"},
    {Family::kDiamond, "diamond"},
    {Family::kKneser, "kneser"},
    {Family::kCycleWithBicliques, "cycle_with_bicliques"},
}};

void require_at_least(std::string_view field, int value, int min) {
  if (value < min)
    throw ParameterError(std::string(field),
                         "must be >= " + std::to_string(min) + ", got " + std::to_string(value));
}

void require_arity(const FamilySpec& spec, std::size_t expected) {
  if (spec.params.size() != expected)
    throw ParameterError("params", std::string(family_name(spec.family)) + " takes " +
                                       std::to_string(expected) + " parameter(s), got " +
                                       std::to_string(spec.params.size()));
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto [fam, n] : kFamilyNames)
    if (n == name) return fam;
  std::string valid;
  for (auto [fam, n] : kFamilyNames) valid += (valid.empty() ? "" : ", ") + std::string(n);
  throw ParameterError("family", "unknown family '" + std::string(name) + "' (valid: " + valid + ")");
}

std::vector<std::string_view> family_names() {
  std::vector<std::string_view> out;
  for (auto [fam, n] : kFamilyNames) out.push_back(n);
  return out;
}

Graph path_graph(int n) {
  require_at_least("n", n, 1);
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  require_at_least("n", n, 3);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  require_at_least("n", n, 1);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph complete_bipartite_graph(int m, int n) {
  require_at_least("m", m, 1);
  require_at_least("n", n, 1);
  GraphBuilder b(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) b.add_edge(i, m + j);
  return std::move(b).build();
}

Graph star_graph(int n) {
  require_at_least("n", n, 1);
  return complete_bipartite_graph(1, n);
}

Graph diamond_graph() {
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(0, 2).add_edge(0, 3).add_edge(1, 2).add_edge(1, 3);
  return std::move(b).build();
}

Graph kneser_graph(int n, int k) {
  require_at_least("k", k, 1);
  if (n < 2 * k)
    throw ParameterError("n", "kneser requires n >= 2k, got n=" + std::to_string(n) +
                                  ", k=" + std::to_string(k));
  const auto subsets = k_subsets(n, k);
  const int count = static_cast<int>(subsets.size());
  std::vector<VertexSet> as_sets;
  as_sets.reserve(count);
  for (const auto& s : subsets) {
    VertexSet vs(n);
    for (int x : s) vs.insert(x);
    as_sets.push_back(std::move(vs));
  }
  GraphBuilder b(count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (!as_sets[i].intersects(as_sets[j])) b.add_edge(i, j);
  return std::move(b).build();
}

Graph cycle_with_bicliques(int cycle_length, std::span<const int> attachments) {
  require_at_least("cycle_length", cycle_length, 3);
  if (static_cast<int>(attachments.size()) > cycle_length)
    throw ParameterError("params", "more attachments than cycle vertices");
  int total = cycle_length;
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    require_at_least("m_" + std::to_string(i + 1), attachments[i], 1);
    total += attachments[i] + 1;
  }
  GraphBuilder b(total);
  for (int i = 0; i < cycle_length; ++i) b.add_edge(i, (i + 1) % cycle_length);
  int next = cycle_length;
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    const int apex = next + attachments[i];
    for (int j = 0; j < attachments[i]; ++j) {
      b.add_edge(static_cast<int>(i), next + j);
      b.add_edge(apex, next + j);
    }
    next = apex + 1;
  }
  return std::move(b).build();
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kPath:
      require_arity(spec, 1);
      return path_graph(p[0]);
    case Family::kCycle:
      require_arity(spec, 1);
      return cycle_graph(p[0]);
    case Family::kComplete:
      require_arity(spec, 1);
      return complete_graph(p[0]);
    case Family::kCompleteBipartite:
      require_arity(spec, 2);
      return complete_bipartite_graph(p[0], p[1]);
    case Family::kStar:
      require_arity(spec, 1);
      return star_graph(p[0]);
    case Family::kDiamond:
      require_arity(spec, 0);
      return diamond_graph();
    case Family::kKneser:
      require_arity(spec, 2);
      return kneser_graph(p[0], p[1]);
    case Family::kCycleWithBicliques:
      if (p.empty()) throw ParameterError("params", "cycle_with_bicliques needs a cycle length");
      return cycle_with_bicliques(p[0], std::span<const int>(p).subspan(1));
  }
  throw ParameterError("family", "unhandled family");
}

}  // namespace tokgraph
