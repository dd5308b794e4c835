#ifndef TOKGRAPH_COMBINATORICS_H_
#define TOKGRAPH_COMBINATORICS_H_

#include <cstdint>
#include <vector>

namespace tokgraph {

// C(n, k); zero when k < 0 or k > n. Exact for every value used here
// (n <= 62).
std::int64_t binomial(int n, int k);

// All k-subsets of {0..n-1}, each sorted ascending, in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

// Position of a sorted k-subset of {0..n-1} in the order of k_subsets(n, k).
std::int64_t subset_rank(int n, const std::vector<int>& subset);

}  // namespace tokgraph

#endif  // TOKGRAPH_COMBINATORICS_H_
