#include <algorithm>
#include <map>

#include "checks.h"
#include "tokgraph/combinatorics.h"
#include "tokgraph/graph_io.h"

namespace tokgraph::harness::detail {
namespace {

using Outcome = CheckContext::Outcome;

Graph f22(const Graph& g) { return build_token_graph(g, 2, 2).graph; }

// Compares a computed invariant of F_2^2(host) to a stated value.
void expect_value(Outcome& out, const Graph& host, const Graph& t, const std::string& invariant, int value,
                  int stated) {
  out.expected[invariant] = stated;
  out.actual[invariant] = value;
  if (value != stated && out.status == Status::kPass)
    out.fail(invariant_witness(t, invariant, value, "==", stated, invariant + " differs from the stated value",
                               {&host, 2, 2}));
}

// Closed form for alpha(P_m x P_n): mn/2 when both are even, m(n+1)/2
// when m is odd. With only n odd the roles are swapped (the product is
// symmetric).
double closed_form_alpha_direct_paths(int m, int n) {
  if (m % 2 == 0 && n % 2 == 0) return m * n / 2.0;
  if (m % 2 == 1) return m * (n + 1) / 2.0;
  return n * (m + 1) / 2.0;
}

int floor_ceil_half(int n) { return (n / 2) * ((n + 1) / 2); }

}  // namespace

void check_cycle_chromatic_clique(CheckContext& ctx) {
  for (int n = 3; n <= 12; ++n) {
    ctx.instance({{"n", n}, {"part", "chi_omega"}}, n, false, [n](Outcome& out, const Budget& budget) {
      const Graph host = cycle_graph(n);
      const Graph t = f22(host);
      const int chi = n == 4 ? 4 : 3;
      const int omega = n == 4 ? 4 : (n == 3 || n == 6) ? 3 : 2;
      expect_value(out, host, t, "chi", chromatic_number(t, budget).value, chi);
      expect_value(out, host, t, "omega", clique_number(t, budget).value, omega);
    });
  }
  for (int n = 6; n <= 12; n += 2) {
    const auto variant = n % 3 == 1 ? CycleColoringVariant::kCPrime : CycleColoringVariant::kC;
    const std::string name = variant == CycleColoringVariant::kC ? "c" : "c_prime";
    ctx.instance({{"n", n}, {"part", "coloring"}, {"variant", name}}, n, false,
                 [=](Outcome& out, const Budget&) {
                   const CycleColoring coloring = cycle_coloring(n, variant);
                   const ColoringValidation v = validate_cycle_coloring(coloring);
                   out.expected = {{"proper", true}, {"colors", 3}};
                   out.actual = {{"proper", v.proper}, {"colors", v.colors_used}, {"conflicts", v.conflicts.size()}};
                   if (v.proper && v.colors_used <= 3) return;
                   if (!v.proper)
                     out.discrepancy(edge_conflict_witness(
                         coloring, v,
                         "the explicit colouring " + name + " gives equal colours to adjacent configurations"));
                   else
                     out.fail({{"kind", "error"}, {"explanation", "colouring uses more than three colours"}});
                 });
  }
}

void check_alpha_cycles(CheckContext& ctx) {
  for (int n : {5, 7, 9}) {
    ctx.instance({{"n", n}}, n, false, [n](Outcome& out, const Budget& budget) {
      const Graph host = cycle_graph(n);
      const Graph t = f22(host);
      const int h = (n - 1) / 2;
      expect_value(out, host, t, "alpha", independence_number(t, budget).value, h * h);
    });
  }
  for (int n : {6, 8, 10}) {
    ctx.instance({{"n", n}}, n, false, [n](Outcome& out, const Budget& budget) {
      const Graph host = cycle_graph(n);
      const Graph t = f22(host);
      const int stated = n * (n - 2) / 8 + static_cast<int>(binomial(n / 2, 2));
      const int alpha = independence_number(t, budget).value;
      expect_value(out, host, t, "alpha", alpha, stated);
      // The stated chain gamma <= i <= alpha for even cycles.
      const int gamma = domination_number(t, budget).value;
      const int idom = independent_domination_number(t, budget).value;
      out.actual["gamma"] = gamma;
      out.actual["idom"] = idom;
      out.expected["chain"] = "gamma <= idom <= alpha";
      if (out.status == Status::kPass && gamma > idom)
        out.fail({{"kind", "error"}, {"explanation", "independent domination below domination"}});
      if (out.status == Status::kPass && idom > stated)
        out.fail(invariant_witness(t, "idom", idom, "==", stated, "independent domination above the bound",
                                   {&host, 2, 2}));
    });
  }
}

void check_alpha_paths(CheckContext& ctx) {
  for (int n = 2; n <= 9; ++n) {
    ctx.instance({{"n", n}}, n, false, [n](Outcome& out, const Budget& budget) {
      const Graph host = path_graph(n);
      const Graph t = f22(host);
      expect_value(out, host, t, "alpha", independence_number(t, budget).value, floor_ceil_half(n));
    });
  }
}

void check_gamma_cycles(CheckContext& ctx) {
  // Stated exact values; C_9 has none.
  const std::vector<std::pair<int, int>> cycles = {{3, 1}, {5, 3}, {7, 6}, {9, -1}, {11, 14}};
  for (const auto& [n, stated] : cycles) {
    const bool slow = n >= 9;
    ctx.instance({{"n", n}, {"part", "exact"}}, n, slow, [n, stated](Outcome& out, const Budget& budget) {
      const Graph host = cycle_graph(n);
      const Graph t = f22(host);
      const auto gamma = domination_number(t, budget);
      const int m = (n - 1) / 2;
      // m(2m+1)/5 <= gamma <= (m+2)(2m+3)/5, compared after scaling by 5.
      out.expected = {{"gamma", stated >= 0 ? Json(stated) : Json(nullptr)},
                      {"bounds", {m * (2 * m + 1) / 5.0, (m + 2) * (2 * m + 3) / 5.0}}};
      out.actual = {{"gamma", gamma.value}, {"dominating_set", gamma.vertices}};
      if (stated >= 0 && gamma.value != stated) {
        out.fail(invariant_witness(t, "gamma", gamma.value, "==", stated, "domination number differs",
                                   {&host, 2, 2}));
        return;
      }
      if (5 * gamma.value < m * (2 * m + 1))
        out.fail(invariant_witness(t, "gamma", gamma.value, "==", m * (2 * m + 1) / 5.0, "below the lower bound",
                                   {&host, 2, 2}));
      else if (5 * gamma.value > (m + 2) * (2 * m + 3))
        out.fail(invariant_witness(t, "gamma", gamma.value, "==", (m + 2) * (2 * m + 3) / 5.0,
                                   "above the upper bound", {&host, 2, 2}));
    });
  }
  // Cited bounds mn/5 <= gamma(C_m x P_n) <= (m+2)(n+2)/5.
  for (int m = 3; m <= 11; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const bool slow = m * n > 36;
      ctx.instance({{"m", m}, {"n", n}, {"part", "cylinder_bounds"}}, m, slow,
                   [m, n](Outcome& out, const Budget& budget) {
                     const Graph g = cartesian_product(cycle_graph(m), path_graph(n));
                     const int gamma = domination_number(g, budget).value;
                     out.expected = {{"bounds", {m * n / 5.0, (m + 2) * (n + 2) / 5.0}}};
                     out.actual = {{"gamma", gamma}};
                     if (5 * gamma < m * n)
                       out.fail(invariant_witness(g, "gamma", gamma, "==", m * n / 5.0, "below the lower bound"));
                     else if (5 * gamma > (m + 2) * (n + 2))
                       out.fail(invariant_witness(g, "gamma", gamma, "==", (m + 2) * (n + 2) / 5.0,
                                                  "above the upper bound"));
                   });
    }
  }
}

void check_aut_embedding(CheckContext& ctx) {
  const int samples = 100;
  const int hi = std::min(8, ctx.caps().max_n);
  ctx.instance({{"samples", samples}, {"n", {3, 8}}, {"k", 2}, {"m", 2}}, 3, false,
               [&](Outcome& out, const Budget& budget) {
                 out.expected = {{"injective", samples}, {"divides", samples}};
                 int injective = 0;
                 int divides = 0;
                 for (int i = 0; i < samples; ++i) {
                   const Graph g = random_graph(ctx.rng(), 3, hi, GraphClass::kAny);
                   const PermGroup aut = automorphism_group(g, budget);
                   const TokenGraph t = build_token_graph(g, 2, 2);
                   std::vector<Permutation> induced;
                   for (const auto& f : aut.generators()) induced.push_back(induced_token_automorphism(g, f, t));
                   // Same order as Aut(G) means f -> phi_f has trivial kernel.
                   const bool inj = PermGroup(t.graph.order(), induced).order() == aut.order();
                   const bool div = automorphism_group(t.graph, budget).order() % aut.order() == 0;
                   injective += inj;
                   divides += div;
                   if ((!inj || !div) && out.status == Status::kPass)
                     out.fail({{"kind", "embedding"},
                               {"graph6", graph6_encode(g)},
                               {"explanation", !inj ? "induced map is not injective"
                                                    : "|Aut(G)| does not divide |Aut(F_2^2(G))|"}});
                 }
                 out.actual = {{"injective", injective}, {"divides", divides}};
               });
}

void check_aut_kmn(CheckContext& ctx) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    ctx.instance({{"m", m}, {"n", n}}, m + n, false, [m, n](Outcome& out, const Budget& budget) {
      const Graph t = f22(complete_bipartite_graph(m, n));
      const BigInt formula = factorial(m * n) * factorial(static_cast<int>(binomial(n, 2))) *
                             factorial(static_cast<int>(binomial(m, 2)));
      const BigInt order = automorphism_group(t, budget).order();
      out.expected = {{"order", to_decimal(formula)}};
      out.actual = {{"order", to_decimal(order)}};
      if (order == formula) return;
      if (m == n && order == 2 * formula)
        out.discrepancy(group_order_witness(
            t, order, formula,
            "with C(m,2) = C(n,2) the two sides of the complete bipartite component can be swapped, "
            "doubling the stated order"));
      else
        out.fail(group_order_witness(t, order, formula, "automorphism group order differs from the formula"));
    });
  }
}

void check_aut_odd_cycle(CheckContext& ctx) {
  for (int n : {5, 7, 9}) {
    ctx.instance({{"n", n}}, n, false, [n](Outcome& out, const Budget& budget) {
      const Graph t = f22(cycle_graph(n));
      const BigInt order = automorphism_group(t, budget).order();
      out.expected = {{"order", std::to_string(4 * n)}};
      out.actual = {{"order", to_decimal(order)}};
      if (order != 4 * n) out.fail(group_order_witness(t, order, 4 * n, "order differs from 4n"));
    });
  }
}

void check_diamond_example(CheckContext& ctx) {
  ctx.instance(Json::object(), 4, false, [](Outcome& out, const Budget& budget) {
    const Graph t = f22(diamond_graph());
    std::vector<int> degrees;
    for (int v = 0; v < t.order(); ++v) degrees.push_back(t.degree(v));
    std::sort(degrees.begin(), degrees.end());
    const std::vector<int> stated = {1, 4, 4, 4, 4, 5};
    const BigInt order = automorphism_group(t, budget).order();
    out.expected = {{"degrees", stated}, {"order", "24"}};
    out.actual = {{"degrees", degrees}, {"order", to_decimal(order)}};
    if (order != 24)
      out.fail(group_order_witness(t, order, 24, "order differs from |S_4|"));
    else if (degrees != stated)
      out.fail({{"kind", "error"}, {"graph6", graph6_encode(t)}, {"explanation", "degree sequence differs"}});
  });
}

void check_alpha_direct_product_paths(CheckContext& ctx) {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      ctx.instance({{"m", m}, {"n", n}, {"part", "product_formula"}}, std::max(m, n), false,
                   [m, n](Outcome& out, const Budget& budget) {
                     const Graph g = tensor_product(path_graph(m), path_graph(n));
                     const int alpha = independence_number(g, budget).value;
                     const double closed = closed_form_alpha_direct_paths(m, n);
                     out.expected = {{"alpha", closed}};
                     out.actual = {{"alpha", alpha}};
                     if (alpha == closed) return;
                     out.discrepancy(invariant_witness(
                         g, "alpha", alpha, "==", closed,
                         "the closed form for alpha(P_m x P_n) gives " + Json(closed).dump() +
                             " but the exact value is " + std::to_string(alpha)));
                   });
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (int m = n; m <= 6; ++m) {
      ctx.instance({{"n", n}, {"m", m}, {"part", "union_formula"}}, n + m, false,
                   [m, n](Outcome& out, const Budget& budget) {
                     const Graph host = disjoint_union(path_graph(n), path_graph(m));
                     const Graph t = f22(host);
                     const int alpha = independence_number(t, budget).value;
                     const int product = independence_number(tensor_product(path_graph(n), path_graph(m)), budget).value;
                     const double stated = floor_ceil_half(n) + floor_ceil_half(m) + closed_form_alpha_direct_paths(m, n);
                     const int exact = floor_ceil_half(n) + floor_ceil_half(m) + product;
                     out.expected = {{"alpha", stated}, {"alpha_with_exact_product", exact}};
                     out.actual = {{"alpha", alpha}};
                     if (alpha != exact) {
                       out.fail(invariant_witness(t, "alpha", alpha, "==", exact,
                                                  "alpha is not additive over the three pieces", {&host, 2, 2}));
                     } else if (alpha != stated) {
                       out.discrepancy(invariant_witness(
                           t, "alpha", alpha, "==", stated,
                           "the union formula holds with the exact alpha(P_n x P_m) but not with the closed form",
                           {&host, 2, 2}));
                     }
                   });
    }
  }
}

void check_conjecture_scan(CheckContext& ctx) {
  const int samples = 100;
  const int hi = std::min(7, ctx.caps().max_n);
  ctx.instance({{"samples", samples}, {"n", {3, 7}}, {"class", "connected"}}, 3, false,
               [&](Outcome& out, const Budget& budget) {
                 Json equal = Json::array();
                 Json differ = Json::array();
                 for (int i = 0; i < samples; ++i) {
                   const Graph g = random_graph(ctx.rng(), 3, hi, GraphClass::kConnected);
                   const BigInt a = automorphism_group(g, budget).order();
                   const BigInt b = automorphism_group(f22(g), budget).order();
                   Json row = {{"graph6", graph6_encode(g)}, {"aut_g", to_decimal(a)}, {"aut_f22", to_decimal(b)}};
                   (a == b ? equal : differ).push_back(std::move(row));
                 }
                 out.expected = {{"informational", true}};
                 out.actual = {{"equal_count", equal.size()},
                               {"different_count", differ.size()},
                               {"equal", equal},
                               {"different", differ}};
               });
}

}  // namespace tokgraph::harness::detail
