#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquenorm {

// Exact integer binomial coefficient; 0 when k > n.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

std::uint64_t factorial_u64(int n);

// Calls f(std::span<const int>) on every k-subset of {0,...,n-1}, as sorted
// index vectors in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k == 0) {
    f(std::span<const int>(idx));
    return;
  }
  while (true) {
    f(std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int l = i + 1; l < k; ++l)
      idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
  }
}

// Pairwise (cascade) summation; deterministic for a fixed input order and
// more accurate than a running sum on long term lists.
double pairwise_sum(std::span<const double> values);

}  // namespace cliquenorm
