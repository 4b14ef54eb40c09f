#include "hdom/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdom {

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact: product of i consecutive ints is divisible by i!
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k) {
  auto v = binomial(n, k);
  if (!v) throw std::overflow_error("binomial overflow");
  return *v;
}

std::vector<VertexId> unrank_combination(std::uint64_t n, unsigned k, std::uint64_t rank) {
  std::vector<VertexId> out;
  out.reserve(k);
  std::uint64_t v = 0;
  for (unsigned i = 0; i < k; ++i) {
    for (;; ++v) {
      std::uint64_t block = binomial_exact(n - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(static_cast<VertexId>(v));
    ++v;
  }
  return out;
}

std::vector<std::uint32_t> masks_of_size(unsigned n, unsigned k) {
  std::vector<std::uint32_t> out;
  if (k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint32_t limit = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  std::uint32_t m = (k == 32) ? 0xffffffffu : ((1u << k) - 1);
  while (m <= limit) {
    out.push_back(m);
    std::uint32_t c = m & static_cast<std::uint32_t>(-static_cast<std::int32_t>(m));
    std::uint32_t r = m + c;
    if (c == 0 || r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> permutation_table(unsigned r) {
  std::vector<std::uint8_t> p(r);
  for (unsigned i = 0; i < r; ++i) p[i] = static_cast<std::uint8_t>(i);
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<std::uint64_t> pow_checked(std::uint64_t base, std::uint64_t exp) {
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t factorial(unsigned k) {
  if (k > 20) throw std::overflow_error("factorial overflow");
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace hdom
