#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hdom/common.hpp"

namespace hdom {

// C(n, k), or nullopt on uint64 overflow.
std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k);

// C(n, k) where the caller knows the value fits.
std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k);

// k-subset of {0..n-1} with lexicographic rank `rank` (sorted ascending).
std::vector<VertexId> unrank_combination(std::uint64_t n, unsigned k, std::uint64_t rank);

// Calls f(const std::vector<VertexId>&) for every k-subset of {0..n-1} in
// lexicographic order. f may return void, or bool where false stops early.
template <typename F>
void for_each_combination(std::size_t n, unsigned k, F&& f) {
  if (k > n) return;
  std::vector<VertexId> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if constexpr (std::is_same_v<decltype(f(c)), bool>) {
      if (!f(c)) return;
    } else {
      f(c);
    }
    if (k == 0) return;
    // advance: find rightmost slot that can move up
    unsigned i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (unsigned j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// All k-bit masks over n bit positions in increasing numeric order (Gosper).
std::vector<std::uint32_t> masks_of_size(unsigned n, unsigned k);

// All permutations of {0..r-1} in lexicographic order; perms[rank][pos].
std::vector<std::vector<std::uint8_t>> permutation_table(unsigned r);

// (r!)^m, or nullopt on uint64 overflow.
std::optional<std::uint64_t> pow_checked(std::uint64_t base, std::uint64_t exp);

std::uint64_t factorial(unsigned k);  // k <= 20

}  // namespace hdom
