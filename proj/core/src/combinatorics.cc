#include "tokgraph/combinatorics.h"

namespace tokgraph {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::int64_t subset_rank(int n, const std::vector<int>& subset) {
  // Count the subsets that precede `subset`: at position i, every smaller
  // choice c in (prev, subset[i]) is followed by C(n-1-c, k-1-i) completions.
  const int k = static_cast<int>(subset.size());
  std::int64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1; c < subset[i]; ++c) rank += binomial(n - 1 - c, k - 1 - i);
    prev = subset[i];
  }
  return rank;
}

}  // namespace tokgraph
