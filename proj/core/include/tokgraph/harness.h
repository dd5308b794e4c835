#ifndef TOKGRAPH_HARNESS_H_
#define TOKGRAPH_HARNESS_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tokgraph/budget.h"
#include "tokgraph/graph.h"

namespace tokgraph {

std::string_view version();

namespace harness {

using Json = nlohmann::ordered_json;

enum class Status { kPass, kFail, kDiscrepancy, kBudgetExceeded, kSkipped };

// "pass", "fail", "discrepancy-expected", "budget-exceeded", "skipped".
std::string_view status_name(Status s);

struct Caps {
  // Instances whose host graph has more vertices than this are skipped.
  int max_n = 16;
  // Per-instance wall-clock limit.
  std::int64_t timeout_ms = 1'800'000;
  std::uint64_t max_nodes = 2'000'000'000;
  bool include_slow = false;
};

struct CheckResult {
  std::string name;
  Json params = Json::object();
  Status status = Status::kPass;
  Json expected;
  Json actual;
  // Always set for kFail and kDiscrepancy; see revalidate_witness.
  Json witness;
  double runtime_ms = 0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  Caps caps;
  std::vector<CheckResult> checks;

  int count(Status s) const;
};

// Portable sampling stream. Every draw goes through std::mt19937_64, whose
// output sequence is fixed by the standard:
//   uniform_int(lo, hi) = lo + x % (hi - lo + 1)
//   uniform_real()      = (x >> 11) * 2^-53
// where x is the next 64-bit output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Seed of the stream for one check: seed XOR FNV-1a-64(name).
std::uint64_t check_seed(std::uint64_t seed, std::string_view name);

enum class GraphClass { kAny, kConnected, kConnectedBipartite, kConnectedNonBipartite };

// Erdos-Renyi sample: n = uniform_int(n_lo, n_hi), p = {0.3, 0.5, 0.7} at
// index uniform_int(0, 2), then each pair (u, v), u < v in lexicographic
// order, is an edge when uniform_real() < p. Samples outside `cls` are
// rejected and redrawn.
Graph random_graph(Rng& rng, int n_lo, int n_hi, GraphClass cls);

// Labelled graph on n vertices whose edge set is given by the bits of
// `mask`, pair (u, v) in lexicographic order taking bit i.
Graph graph_from_mask(int n, std::uint64_t mask);

class CheckContext;

struct CheckSpec {
  std::string name;
  std::string summary;
  // Whole check is slow. Individual instances may also be marked slow.
  bool slow = false;
  std::function<void(CheckContext&)> run;
};

// Checks in registry order.
const std::vector<CheckSpec>& registry();

std::vector<std::string> check_names();

// "fast" (every check not marked slow), "all", a single name, or a comma
// separated list. Throws ParameterError(field "suite") listing the
// registry for unknown names.
std::vector<std::string> resolve_suite(std::string_view suite);

struct SuiteOptions {
  std::string suite = "fast";
  std::uint64_t seed = 0;
  Caps caps;
  // Checks run on up to this many threads; results keep registry order.
  int jobs = 1;
};

Report run_suite(const SuiteOptions& options);

Json to_json(const CheckResult& r);
Json to_json(const Report& report);

// Re-checks a witness from a report on its own: decodes the graph6
// strings and recomputes the property it claims. On failure `why` (if
// given) explains.
bool revalidate_witness(const Json& witness, std::string* why = nullptr);

// Passed to each check's run function.
class CheckContext {
 public:
  CheckContext(const CheckSpec& spec, std::uint64_t seed, const Caps& caps)
      : spec_(spec), rng_(check_seed(seed, spec.name)), caps_(caps) {}

  Rng& rng() { return rng_; }
  const Caps& caps() const { return caps_; }

  // Outcome of one instance, filled in by the body.
  struct Outcome {
    Status status = Status::kPass;
    Json expected;
    Json actual;
    Json witness;

    void fail(Json w) {
      status = Status::kFail;
      witness = std::move(w);
    }
    void discrepancy(Json w) {
      status = Status::kDiscrepancy;
      witness = std::move(w);
    }
  };

  // Runs one instance. It is skipped when host_n exceeds the size cap or
  // when `slow` is set without include_slow. ResourceError becomes
  // budget-exceeded; any other exception becomes a failure carrying the
  // message.
  void instance(Json params, int host_n, bool slow,
                const std::function<void(Outcome&, const Budget&)>& body);

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const CheckSpec& spec_;
  Rng rng_;
  Caps caps_;
  std::vector<CheckResult> results_;
};

}  // namespace harness
}  // namespace tokgraph

#endif  // TOKGRAPH_HARNESS_H_
