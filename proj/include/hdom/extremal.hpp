#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hdom/domination.hpp"
#include "hdom/orientation.hpp"

namespace hdom {

struct ExtremalResult {
  std::size_t value = 0;
  Orientation witness;
  bool exact = false;
  std::uint64_t orientations_examined = 0;
};

struct SearchConfig {
  std::uint32_t restarts = 8;
  std::uint32_t max_steps = 400;
  std::uint64_t seed = 1;
  std::uint32_t plateau_limit = 30;
  std::uint64_t node_budget = 2'000'000;  // per objective evaluation

  void validate() const;
};

// Exact upper directed p-domination number by full enumeration of the
// (r!)^e(H) per-edge permutation space, in mixed-radix counter order
// (edge 0 is the most significant digit, permutations in lexicographic rank
// order). Refuses with the exact count when it exceeds `cap`. On ties the
// witness is the orientation with the smallest counter index, independent of
// the thread count.
ExtremalResult gamma_upper_exact(std::shared_ptr<const Hypergraph> h, unsigned p,
                                 std::uint64_t cap, unsigned threads = 1);

struct MonotonicityReport {
  std::vector<std::size_t> gamma_by_p;  // index 0 holds p = 1
  bool monotone = true;
  std::uint64_t orientations_examined = 0;
};

// Gamma-upper for every p in [1, r-1] by one exact enumeration; checks that
// the values are nondecreasing in p.
MonotonicityReport verify_gamma_monotonicity(std::shared_ptr<const Hypergraph> h,
                                             std::uint64_t cap, unsigned threads = 1);

// Hill climbing over orientations, maximizing the exact minimum dominating
// set size. Moves re-permute a single edge; strictly improving moves are
// accepted and up to plateau_limit consecutive equal-value moves are allowed.
// The result is a certified lower bound on the upper domination number: the
// witness orientation is explicit and its value is re-verified exactly.
ExtremalResult gamma_upper_search(std::shared_ptr<const Hypergraph> h, unsigned p,
                                  const SearchConfig& cfg, unsigned threads = 1,
                                  const std::function<void(std::uint32_t restart,
                                                           std::uint32_t step,
                                                           std::size_t value)>& trace = nullptr);

// Enumerates all orientations in counter order, invoking fn on each; for
// small instances and verification suites.
void for_each_orientation(std::shared_ptr<const Hypergraph> h,
                          const std::function<void(const Orientation&)>& fn,
                          std::uint64_t cap);

// Number of orientations (r!)^e(H) as a decimal string.
std::string orientation_count_string(const Hypergraph& h);

}  // namespace hdom
