#ifndef TOKGRAPH_INVARIANTS_H_
#define TOKGRAPH_INVARIANTS_H_

#include <string_view>
#include <utility>
#include <vector>

#include "tokgraph/budget.h"
#include "tokgraph/graph.h"
#include "tokgraph/token_graph.h"

namespace tokgraph {

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Either a proper 2-colouring (`side`) or an odd cycle as a closed vertex
// sequence (first vertex not repeated at the end).
struct BipartitenessCertificate {
  bool bipartite = true;
  std::vector<int> side;
  std::vector<int> odd_cycle;
};

BipartitenessCertificate bipartiteness(const Graph& g);
bool validate(const Graph& g, const BipartitenessCertificate& cert);

enum class WitnessKind {
  kIndependentSet,
  kClique,
  kColoring,
  kDominatingSet,
  kIndependentDominatingSet,
};

std::string_view witness_kind_name(WitnessKind kind);

// `vertices` for set-valued kinds; `colors` (one entry per vertex, values
// 0..value-1) for kColoring.
struct InvariantWitness {
  WitnessKind kind;
  int value = 0;
  std::vector<int> vertices;
  std::vector<int> colors;
};

// Checks the witness against its definition on g and that `value` equals
// the set size or number of colours.
bool validate(const Graph& g, const InvariantWitness& w);

// Exact solvers. All are deterministic (lowest index wins ties) and throw
// ResourceError when the budget runs out.
InvariantWitness independence_number(const Graph& g, const Budget& budget = {});
InvariantWitness clique_number(const Graph& g, const Budget& budget = {});
InvariantWitness chromatic_number(const Graph& g, const Budget& budget = {});
InvariantWitness domination_number(const Graph& g, const Budget& budget = {});
InvariantWitness independent_domination_number(const Graph& g, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Explicit 3-colourings of the non-bipartite component of F_2^2(C_n), n even.
//
// Both work on the 1-based cycle labels 1..n (vertex x here is x-1 in
// cycle_graph(n)). For a pair {x, y} written with x < y:
//   kC:      colour x mod 3, where n counts as smaller than 1 (so the pair
//            {1, n} is written (n, 1) and coloured n mod 3).
//   kCPrime: x = 1 gives 2 (for y < n), x = 2 gives 1, x > 3 gives x mod 3.
//            The rule leaves x = 3 and {1, n} open; x = 3 takes 3 mod 3 = 0
//            and {1, n} takes n mod 3 as under kC.
enum class CycleColoringVariant { kC, kCPrime };

struct CycleColoring {
  int n = 0;
  CycleColoringVariant variant = CycleColoringVariant::kC;
  // 0-based configs (pairs of cycle_graph(n) vertices) with their colour.
  std::vector<std::pair<TokenConfig, int>> assignment;
};

// Requires even n >= 6; kC needs n % 3 != 1, kCPrime needs n % 3 == 1.
CycleColoring cycle_coloring(int n, CycleColoringVariant variant);

struct ColoringValidation {
  bool proper = true;
  int colors_used = 0;
  // Edges of F_2^2(C_n) whose endpoints received the same colour.
  std::vector<std::pair<TokenConfig, TokenConfig>> conflicts;
};

ColoringValidation validate_cycle_coloring(const CycleColoring& coloring);

}  // namespace tokgraph

#endif  // TOKGRAPH_INVARIANTS_H_
