#ifndef TOKGRAPH_BUDGET_H_
#define TOKGRAPH_BUDGET_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace tokgraph {

// Search limits shared by the exact solvers and the canonical search.
struct Budget {
  std::uint64_t max_nodes = 2'000'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget WithTimeout(std::chrono::milliseconds timeout) {
    Budget b;
    b.deadline = std::chrono::steady_clock::now() + timeout;
    return b;
  }
};

// Counts search nodes and throws ResourceError once a limit is crossed. The
// clock is sampled every 1024 nodes.
class BudgetMeter {
 public:
  BudgetMeter(const Budget& budget, std::string what) : budget_(budget), what_(std::move(what)) {}

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) exceeded("node budget");
    if (budget_.deadline && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > *budget_.deadline)
      exceeded("time budget");
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  [[noreturn]] void exceeded(const char* which) const;

  Budget budget_;
  std::string what_;
  std::uint64_t nodes_ = 0;
};

}  // namespace tokgraph

#endif  // TOKGRAPH_BUDGET_H_
