// tokgraph: generate graphs, build token graphs, compute invariants and
// automorphism groups, and run the verification suites.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error, 3 a search
// budget ran out.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tokgraph/canonical.h"
#include "tokgraph/errors.h"
#include "tokgraph/graph_io.h"
#include "tokgraph/harness.h"
#include "tokgraph/invariants.h"
#include "tokgraph/token_graph.h"

namespace {

using Json = nlohmann::ordered_json;
using namespace tokgraph;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr const char* kSeedEnv = "TOKGRAPH_SEED";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Input format: explicit flag, else by extension, else graph6.
Graph read_graph(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) fmt = ends_with(path, ".el") || ends_with(path, ".edgelist") ? "edgelist" : "g6";
  const std::string text = read_all(path);
  if (fmt == "g6") {
    // Tolerate trailing whitespace from shell pipelines.
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    return graph6_decode(trimmed);
  }
  if (fmt == "edgelist") return edge_list_decode(text);
  throw UsageError("unknown input format '" + fmt + "'");
}

std::string format_graph(const Graph& g, const std::string& format, const std::vector<std::string>& labels = {}) {
  if (format == "g6") return graph6_encode(g) + "\n";
  if (format == "edgelist") return edge_list_encode(g);
  if (format == "dot") return dot_export(g, labels);
  throw UsageError("unknown output format '" + format + "'");
}

Budget make_budget(std::int64_t timeout_ms) {
  return timeout_ms > 0 ? Budget::WithTimeout(std::chrono::milliseconds(timeout_ms)) : Budget{};
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
  }
  return 0;
}

Json witness_json(const InvariantWitness& w) {
  Json j = {{"value", w.value}, {"kind", witness_kind_name(w.kind)}};
  if (w.kind == WitnessKind::kColoring)
    j["colors"] = w.colors;
  else
    j["vertices"] = w.vertices;
  return j;
}

// --- gen ------------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::vector<int> params;
  std::string out;
  std::string format = "g6";
};

int run_gen(const GenOptions& o) {
  const Graph g = generate({parse_family(o.family), o.params});
  if (o.format == "json") {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    write_all(o.out, Json{{"graph6", graph6_encode(g)}, {"n", g.order()}, {"edges", edges}}.dump() + "\n");
  } else {
    write_all(o.out, format_graph(g, o.format));
  }
  return kExitOk;
}

// --- build ----------------------------------------------------------------

struct BuildOptions {
  std::string input;
  std::string in_format;
  int k = 0;
  int m = 0;
  int r = 0;
  std::string variant = "generalized";
  std::string out;
  std::string labels;
  std::string format = "g6";
};

int run_build(const BuildOptions& o) {
  const Graph host = read_graph(o.input, o.in_format);
  TokenGraph t;
  if (o.variant == "generalized") {
    if (o.m <= 0) throw UsageError("--m is required for the generalized token graph");
    t = build_token_graph(host, o.k, o.m);
  } else if (o.variant == "fkr" || o.variant == "fkr-prime") {
    if (o.r <= 0) throw UsageError("--r is required for --variant " + o.variant);
    t = build_variant(host, o.k, o.r, o.variant == "fkr" ? VariantKind::kMatching : VariantKind::kAllEdges);
  } else if (o.variant == "union") {
    t = build_move_union(host, o.k);
  } else {
    throw UsageError("unknown variant '" + o.variant + "'");
  }

  std::vector<std::string> names;
  for (const auto& c : t.labels) names.push_back(config_to_string(c));
  if (o.format == "json") {
    Json j = {{"graph6", graph6_encode(t.graph)},
              {"labels", names},
              {"provenance",
               {{"variant", variant_name(t.provenance.variant)}, {"k", t.provenance.k}, {"moves", t.provenance.moves}}},
              {"vertices", t.graph.order()},
              {"edges", t.graph.size()}};
    write_all(o.out, j.dump() + "\n");
    return kExitOk;
  }
  write_all(o.out, format_graph(t.graph, o.format, names));
  std::string sidecar = o.labels;
  if (sidecar.empty() && !o.out.empty() && o.out != "-" && o.format != "dot") sidecar = o.out + ".labels";
  if (!sidecar.empty()) write_all(sidecar, labels_encode(t.labels));
  return kExitOk;
}

// --- inv ------------------------------------------------------------------

struct InvOptions {
  std::string input;
  std::string in_format;
  std::string which = "all";
  std::int64_t timeout_ms = 0;
};

int run_inv(const InvOptions& o) {
  const Graph g = read_graph(o.input, o.in_format);
  const Budget budget = make_budget(o.timeout_ms);
  std::vector<std::string> which;
  std::stringstream list(o.which);
  for (std::string item; std::getline(list, item, ',');) which.push_back(item);
  if (std::find(which.begin(), which.end(), "all") != which.end())
    which = {"components", "bipartite", "alpha", "omega", "chi", "gamma", "idom"};
  Json out = {{"n", g.order()}, {"m", g.size()}};
  for (const auto& w : which) {
    if (w == "components") {
      const auto comps = connected_components(g);
      out["components"] = {{"count", comps.size()}, {"sets", comps}};
    } else if (w == "bipartite") {
      const auto cert = bipartiteness(g);
      out["bipartite"] = cert.bipartite ? Json{{"bipartite", true}, {"side", cert.side}}
                                        : Json{{"bipartite", false}, {"odd_cycle", cert.odd_cycle}};
    } else if (w == "alpha") {
      out["alpha"] = witness_json(independence_number(g, budget));
    } else if (w == "omega") {
      out["omega"] = witness_json(clique_number(g, budget));
    } else if (w == "chi") {
      out["chi"] = witness_json(chromatic_number(g, budget));
    } else if (w == "gamma") {
      out["gamma"] = witness_json(domination_number(g, budget));
    } else if (w == "idom") {
      out["idom"] = witness_json(independent_domination_number(g, budget));
    } else {
      throw UsageError("unknown invariant '" + w + "'");
    }
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

// --- iso / aut ------------------------------------------------------------

struct IsoOptions {
  std::string first;
  std::string second;
  std::string in_format;
  std::int64_t timeout_ms = 0;
};

int run_iso(const IsoOptions& o) {
  const Graph g = read_graph(o.first, o.in_format);
  const Graph h = read_graph(o.second, o.in_format);
  const IsoResult r = is_isomorphic(g, h, make_budget(o.timeout_ms));
  Json out = {{"isomorphic", r.isomorphic}};
  if (r.mapping) out["mapping"] = std::vector<int>(r.mapping->image().begin(), r.mapping->image().end());
  std::cout << out.dump() << "\n";
  return kExitOk;
}

struct AutOptions {
  std::string input;
  std::string in_format;
  std::int64_t timeout_ms = 0;
};

int run_aut(const AutOptions& o) {
  const Graph g = read_graph(o.input, o.in_format);
  const PermGroup group = automorphism_group(g, make_budget(o.timeout_ms));
  Json gens = Json::array();
  for (const auto& p : group.generators()) gens.push_back(std::vector<int>(p.image().begin(), p.image().end()));
  std::cout << Json{{"order", to_decimal(group.order())}, {"generators", gens}}.dump() << "\n";
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "fast";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int max_n = harness::Caps{}.max_n;
  std::int64_t timeout_ms = harness::Caps{}.timeout_ms;
  std::uint64_t max_nodes = harness::Caps{}.max_nodes;
  bool include_slow = false;
  int jobs = 1;
  std::string out;
  bool list = false;
};

int run_verify(const VerifyOptions& o) {
  if (o.list) {
    for (const auto& c : harness::registry()) std::cout << c.name << "\t" << c.summary << "\n";
    return kExitOk;
  }
  harness::SuiteOptions so;
  so.suite = o.suite;
  so.seed = o.seed_given ? o.seed : default_seed();
  so.caps.max_n = o.max_n;
  so.caps.timeout_ms = o.timeout_ms;
  so.caps.max_nodes = o.max_nodes;
  so.caps.include_slow = o.include_slow;
  so.jobs = o.jobs;
  const harness::Report report = harness::run_suite(so);
  write_all(o.out, harness::to_json(report).dump(2) + "\n");

  const int fails = report.count(harness::Status::kFail);
  const int budget = report.count(harness::Status::kBudgetExceeded);
  std::cerr << "pass " << report.count(harness::Status::kPass) << ", fail " << fails << ", discrepancy "
            << report.count(harness::Status::kDiscrepancy) << ", skipped " << report.count(harness::Status::kSkipped)
            << ", budget-exceeded " << budget << "\n";
  if (fails > 0) return kExitCheckFailed;
  if (budget > 0) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized token graphs: construction, invariants, automorphisms, verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tokgraph::version()));

  const std::vector<std::string> in_formats = {"g6", "edgelist"};

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph from a named family");
  gen_cmd->add_option("family", gen.family, "Family name")->required();
  gen_cmd->add_option("params", gen.params, "Integer parameters");
  gen_cmd->add_option("--out,-o", gen.out, "Output path (default stdout)");
  gen_cmd->add_option("--format,-f", gen.format, "Output format")
      ->check(CLI::IsMember({"g6", "edgelist", "dot", "json"}));

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build a token graph of the input graph");
  build_cmd->add_option("input", build.input, "Input graph (default stdin)");
  build_cmd->add_option("--in-format", build.in_format, "Input format")->check(CLI::IsMember(in_formats));
  build_cmd->add_option("--k", build.k, "Number of tokens")->required();
  build_cmd->add_option("--m", build.m, "Tokens moving per step (generalized)");
  build_cmd->add_option("--r", build.r, "Symmetric difference half-size (fkr, fkr-prime)");
  build_cmd->add_option("--variant", build.variant, "Construction")
      ->check(CLI::IsMember({"generalized", "fkr", "fkr-prime", "union"}));
  build_cmd->add_option("--out,-o", build.out, "Output path (default stdout)");
  build_cmd->add_option("--labels", build.labels, "Label sidecar path (default <out>.labels)");
  build_cmd->add_option("--format,-f", build.format, "Output format")
      ->check(CLI::IsMember({"g6", "edgelist", "dot", "json"}));

  InvOptions inv;
  auto* inv_cmd = app.add_subcommand("inv", "Compute invariants with witnesses (JSON)");
  inv_cmd->add_option("input", inv.input, "Input graph (default stdin)");
  inv_cmd->add_option("--in-format,--format", inv.in_format, "Input format")->check(CLI::IsMember(in_formats));
  inv_cmd->add_option("--which", inv.which,
                      "Comma separated: components, bipartite, alpha, omega, chi, gamma, idom, all");
  inv_cmd->add_option("--timeout", inv.timeout_ms, "Time limit in milliseconds (0 = none)");

  IsoOptions iso;
  auto* iso_cmd = app.add_subcommand("iso", "Test two graphs for isomorphism (JSON)");
  iso_cmd->add_option("first", iso.first, "First graph")->required();
  iso_cmd->add_option("second", iso.second, "Second graph")->required();
  iso_cmd->add_option("--in-format,--format", iso.in_format, "Input format")->check(CLI::IsMember(in_formats));
  iso_cmd->add_option("--timeout", iso.timeout_ms, "Time limit in milliseconds (0 = none)");

  AutOptions aut;
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group generators and order (JSON)");
  aut_cmd->add_option("input", aut.input, "Input graph (default stdin)");
  aut_cmd->add_option("--in-format,--format", aut.in_format, "Input format")->check(CLI::IsMember(in_formats));
  aut_cmd->add_option("--timeout", aut.timeout_ms, "Time limit in milliseconds (0 = none)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks and write a JSON report");
  verify_cmd->add_option("--suite", verify.suite, "fast, all, a check name, or a comma separated list");
  verify_cmd->add_option("--seed", verify.seed, std::string("Sampling seed (default $") + kSeedEnv + " or 0)")
      ->each([&](const std::string&) { verify.seed_given = true; });
  verify_cmd->add_option("--max-n", verify.max_n, "Skip instances whose host graph is larger")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--timeout", verify.timeout_ms, "Per-instance time limit in milliseconds")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-nodes", verify.max_nodes, "Per-search node limit")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--include-slow", verify.include_slow, "Also run instances marked slow");
  verify_cmd->add_option("--jobs,-j", verify.jobs, "Checks to run in parallel")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out,-o", verify.out, "Report path (default stdout)");
  verify_cmd->add_flag("--list", verify.list, "List the registered checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*build_cmd) return run_build(build);
    if (*inv_cmd) return run_inv(inv);
    if (*iso_cmd) return run_iso(iso);
    if (*aut_cmd) return run_aut(aut);
    if (*verify_cmd) return run_verify(verify);
  } catch (const tokgraph::ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const tokgraph::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tokgraph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
