#pragma once

#include <cstdint>
#include <vector>

namespace hdom {

// splitmix64. Self-contained so that seeded runs are reproducible across
// standard libraries and platforms; std::shuffle / distributions are not.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Decorrelated stream for sub-task `index` (per-restart seeds and such).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    Prng g(seed ^ (0x385db6bb10944a25ULL + index * 0x9e3779b97f4a7c15ULL));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace hdom
