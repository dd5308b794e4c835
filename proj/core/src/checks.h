// Check bodies and witness builders shared by the harness sources.
#ifndef TOKGRAPH_SRC_CHECKS_H_
#define TOKGRAPH_SRC_CHECKS_H_

#include <optional>
#include <string>

#include "tokgraph/canonical.h"
#include "tokgraph/harness.h"
#include "tokgraph/invariants.h"
#include "tokgraph/token_graph.h"

namespace tokgraph::harness::detail {

void check_c4_example(CheckContext& ctx);
void check_bipartite_disconnected(CheckContext& ctx);
void check_star_structure(CheckContext& ctx);
void check_kmn_structure(CheckContext& ctx);
void check_fkk_kmn_structure(CheckContext& ctx);
void check_odd_cycle_product(CheckContext& ctx);
void check_even_cycle_components(CheckContext& ctx);
void check_nonbip_component_structure(CheckContext& ctx);
void check_cycle_chromatic_clique(CheckContext& ctx);
void check_alpha_cycles(CheckContext& ctx);
void check_alpha_paths(CheckContext& ctx);
void check_gamma_cycles(CheckContext& ctx);
void check_connectivity_leaves(CheckContext& ctx);
void check_disjoint_union_lemma(CheckContext& ctx);
void check_bipartite_characterization(CheckContext& ctx);
void check_arcs_union_complete(CheckContext& ctx);
void check_complement_corollary(CheckContext& ctx);
void check_aut_embedding(CheckContext& ctx);
void check_aut_kmn(CheckContext& ctx);
void check_aut_odd_cycle(CheckContext& ctx);
void check_diamond_example(CheckContext& ctx);
void check_alpha_direct_product_paths(CheckContext& ctx);
void check_conjecture_scan(CheckContext& ctx);

// Integer-valued graph properties understood by revalidate_witness:
// components, isolated, bipartite (0/1), alpha, omega, chi, gamma, idom.
int measure(const Graph& g, const std::string& invariant, const Budget& budget = {});

// The graph `g` has `invariant` = value, which violates the claim
// "invariant <op> rhs" (op is "==" or "!="). When `host` is given, g must
// be F_k^m(host), which revalidation rebuilds.
struct Construction {
  const Graph* host = nullptr;
  int k = 2;
  int m = 2;
};
Json invariant_witness(const Graph& g, const std::string& invariant, int value, const std::string& op,
                       const Json& rhs, const std::string& explanation, Construction c = {});

// Two graphs claimed isomorphic that are not.
Json not_isomorphic_witness(const Graph& a, const Graph& b, const std::string& explanation);

// Computed automorphism group order differing from a formula.
Json group_order_witness(const Graph& g, const BigInt& order, const BigInt& formula,
                         const std::string& explanation);

// A pair of configs adjacent in exactly one of F_2^2(host) and the
// complement of F_2(host).
Json edge_sets_differ_witness(const Graph& host, const TokenConfig& a, const TokenConfig& b,
                              const std::string& explanation);

// Conflicting edges of one of the explicit cycle colourings.
Json edge_conflict_witness(const CycleColoring& coloring, const ColoringValidation& validation,
                           const std::string& explanation);

Json config_json(const TokenConfig& c);

bool is_path_union(const Graph& g);

}  // namespace tokgraph::harness::detail

#endif  // TOKGRAPH_SRC_CHECKS_H_
