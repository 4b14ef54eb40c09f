#include "hdom/extremal.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hdom/combinatorics.hpp"
#include "hdom/prng.hpp"

namespace hdom {

void SearchConfig::validate() const {
  if (restarts == 0 || max_steps == 0 || plateau_limit == 0 || node_budget == 0)
    throw std::invalid_argument("search config fields must be positive");
}

std::string orientation_count_string(const Hypergraph& h) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), factorial(h.uniformity()),
                static_cast<unsigned long>(h.num_edges()));
  return z.get_str();
}

namespace {

void check_p(const Hypergraph& h, unsigned p) {
  if (p < 1 || p > h.uniformity() - 1)
    throw std::invalid_argument("prefix length p must be in [1, r-1]");
}

std::uint64_t checked_orientation_count(const Hypergraph& h, std::uint64_t cap) {
  auto count = pow_checked(factorial(h.uniformity()), h.num_edges());
  if (!count || *count > cap) throw CapExceeded(orientation_count_string(h), cap);
  return *count;
}

Edge permute_edge(const Edge& canonical, const std::vector<std::uint8_t>& perm) {
  Edge out(canonical.size());
  for (std::size_t i = 0; i < canonical.size(); ++i) out[i] = canonical[perm[i]];
  return out;
}

// Per-edge, per-digit prefix and tail masks for one p. Universe must fit a
// 32-bit mask.
struct DigitMasks {
  std::vector<std::vector<std::uint32_t>> prefix;  // [edge][digit]
  std::vector<std::vector<std::uint32_t>> tail;

  DigitMasks(const Hypergraph& h, unsigned p,
             const std::vector<std::vector<std::uint8_t>>& perms) {
    std::size_t m = h.num_edges();
    unsigned r = h.uniformity();
    prefix.assign(m, std::vector<std::uint32_t>(perms.size()));
    tail.assign(m, std::vector<std::uint32_t>(perms.size()));
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t d = 0; d < perms.size(); ++d) {
        std::uint32_t pm = 0, tm = 0;
        for (unsigned j = 0; j < r; ++j) {
          std::uint32_t bit = 1u << h.edge(e)[perms[d][j]];
          (j < p ? pm : tm) |= bit;
        }
        prefix[e][d] = pm;
        tail[e][d] = tm;
      }
    }
  }
};

// Minimum dominating-set evaluator over 32-bit masks.
struct GammaMaskEval {
  unsigned n;
  std::uint32_t full;
  std::vector<std::vector<std::uint32_t>> combos;  // by size, lazily built

  explicit GammaMaskEval(unsigned n_)
      : n(n_), full(n_ >= 32 ? 0xffffffffu : (1u << n_) - 1), combos(n_ + 1) {
    if (n_ > 20) throw std::logic_error("mask evaluator limited to n <= 20");
  }

  const std::vector<std::uint32_t>& of_size(unsigned k) {
    if (combos[k].empty() && !(k == 0)) combos[k] = masks_of_size(n, k);
    if (k == 0 && combos[0].empty()) combos[0] = {0};
    return combos[k];
  }

  static bool dominates(const std::vector<std::uint32_t>& pm,
                        const std::vector<std::uint32_t>& tm, std::uint32_t full,
                        std::uint32_t s) {
    std::uint32_t cov = s;
    if (cov == full) return true;
    for (std::size_t e = 0; e < pm.size(); ++e) {
      if ((pm[e] & ~s) == 0) {
        cov |= tm[e];
        if (cov == full) return true;
      }
    }
    return cov == full;
  }

  bool exists_of_size(const std::vector<std::uint32_t>& pm,
                      const std::vector<std::uint32_t>& tm, unsigned k) {
    for (std::uint32_t s : of_size(k))
      if (dominates(pm, tm, full, s)) return true;
    return false;
  }

  // smallest k >= start with a dominating k-set; S = V always dominates
  unsigned gamma_from(const std::vector<std::uint32_t>& pm,
                      const std::vector<std::uint32_t>& tm, unsigned start) {
    for (unsigned k = start; k <= n; ++k)
      if (exists_of_size(pm, tm, k)) return k;
    return n;
  }
};

std::vector<std::uint8_t> unrank_digits(std::uint64_t idx, std::size_t m, unsigned radix) {
  std::vector<std::uint8_t> digits(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    digits[i] = static_cast<std::uint8_t>(idx % radix);
    idx /= radix;
  }
  return digits;
}

struct RangeBest {
  std::size_t value = 0;
  std::uint64_t index = 0;
  std::vector<std::uint8_t> digits;
  bool valid = false;
};

// Walk [lo, hi) of the mixed-radix counter, keeping per-p firsts of the
// maximum gamma. tables/best are parallel arrays over the requested p values.
void walk_range_masks(const Hypergraph& h, const std::vector<DigitMasks>& tables,
                      unsigned radix, std::uint64_t lo, std::uint64_t hi,
                      std::vector<RangeBest>& best) {
  std::size_t m = h.num_edges();
  std::size_t np = tables.size();
  auto n = static_cast<unsigned>(h.num_vertices());
  GammaMaskEval eval(n);

  std::vector<std::uint8_t> digits = unrank_digits(lo, m, radix);
  std::vector<std::vector<std::uint32_t>> pm(np, std::vector<std::uint32_t>(m));
  std::vector<std::vector<std::uint32_t>> tm(np, std::vector<std::uint32_t>(m));
  for (std::size_t q = 0; q < np; ++q)
    for (std::size_t e = 0; e < m; ++e) {
      pm[q][e] = tables[q].prefix[e][digits[e]];
      tm[q][e] = tables[q].tail[e][digits[e]];
    }

  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    for (std::size_t q = 0; q < np; ++q) {
      if (!best[q].valid) {
        unsigned g = eval.gamma_from(pm[q], tm[q], 0);
        best[q] = {g, idx, digits, true};
      } else if (!eval.exists_of_size(pm[q], tm[q],
                                      static_cast<unsigned>(best[q].value))) {
        unsigned g = eval.gamma_from(pm[q], tm[q],
                                     static_cast<unsigned>(best[q].value) + 1);
        best[q] = {g, idx, digits, true};
      }
    }
    if (idx + 1 == hi || m == 0) {
      if (m == 0) break;
      continue;
    }
    // odometer increment, least significant digit last
    std::size_t pos = m - 1;
    while (digits[pos] == radix - 1) {
      digits[pos] = 0;
      for (std::size_t q = 0; q < np; ++q) {
        pm[q][pos] = tables[q].prefix[pos][0];
        tm[q][pos] = tables[q].tail[pos][0];
      }
      --pos;
    }
    ++digits[pos];
    for (std::size_t q = 0; q < np; ++q) {
      pm[q][pos] = tables[q].prefix[pos][digits[pos]];
      tm[q][pos] = tables[q].tail[pos][digits[pos]];
    }
  }
}

Orientation orientation_from_digits(std::shared_ptr<const Hypergraph> h,
                                    const std::vector<std::vector<std::uint8_t>>& perms,
                                    const std::vector<std::uint8_t>& digits) {
  std::vector<Edge> orders;
  orders.reserve(h->num_edges());
  for (std::size_t e = 0; e < h->num_edges(); ++e)
    orders.push_back(permute_edge(h->edge(e), perms[digits[e]]));
  return Orientation(std::move(h), std::move(orders));
}

// Multi-p exact enumeration; returns per-p bests. Parallel ranges are static,
// and the merge keeps the smallest counter index per value, so the result
// does not depend on the thread count.
std::vector<RangeBest> enumerate_best(std::shared_ptr<const Hypergraph> h,
                                      const std::vector<unsigned>& ps, std::uint64_t total,
                                      unsigned threads) {
  const Hypergraph& g = *h;
  unsigned radix = static_cast<unsigned>(factorial(g.uniformity()));
  auto perms = permutation_table(g.uniformity());
  std::vector<DigitMasks> tables;
  tables.reserve(ps.size());
  for (unsigned p : ps) tables.emplace_back(g, p, perms);

  std::uint64_t nworkers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<std::vector<RangeBest>> results(nworkers,
                                              std::vector<RangeBest>(ps.size()));
  if (nworkers == 1) {
    walk_range_masks(g, tables, radix, 0, total, results[0]);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = total / nworkers, rem = total % nworkers;
    std::uint64_t lo = 0;
    for (std::uint64_t w = 0; w < nworkers; ++w) {
      std::uint64_t len = chunk + (w < rem ? 1 : 0);
      std::uint64_t hi = lo + len;
      pool.emplace_back([&, lo, hi, w] {
        walk_range_masks(g, tables, radix, lo, hi, results[w]);
      });
      lo = hi;
    }
    for (auto& t : pool) t.join();
  }
  std::vector<RangeBest> merged(ps.size());
  for (const auto& worker : results)
    for (std::size_t q = 0; q < ps.size(); ++q) {
      const RangeBest& c = worker[q];
      if (!c.valid) continue;
      if (!merged[q].valid || c.value > merged[q].value ||
          (c.value == merged[q].value && c.index < merged[q].index))
        merged[q] = c;
    }
  return merged;
}

// Fallback for universes beyond the mask evaluator: solve every leaf exactly.
std::vector<RangeBest> enumerate_best_general(std::shared_ptr<const Hypergraph> h,
                                              const std::vector<unsigned>& ps,
                                              std::uint64_t total) {
  unsigned radix = static_cast<unsigned>(factorial(h->uniformity()));
  auto perms = permutation_table(h->uniformity());
  std::size_t m = h->num_edges();
  std::vector<RangeBest> best(ps.size());
  std::vector<std::uint8_t> digits(m, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Orientation d = orientation_from_digits(h, perms, digits);
    for (std::size_t q = 0; q < ps.size(); ++q) {
      auto [cert, stats] =
          min_directed_dominating(d, ps[q], std::numeric_limits<std::uint64_t>::max());
      if (!best[q].valid || stats.best_found > best[q].value) {
        best[q] = {stats.best_found, idx, digits, true};
      }
    }
    if (m == 0) break;
    std::size_t pos = m - 1;
    while (digits[pos] == radix - 1 && pos > 0) digits[pos--] = 0;
    if (digits[pos] == radix - 1) break;
    ++digits[pos];
  }
  return best;
}

}  // namespace

ExtremalResult gamma_upper_exact(std::shared_ptr<const Hypergraph> h, unsigned p,
                                 std::uint64_t cap, unsigned threads) {
  check_p(*h, p);
  std::uint64_t total = checked_orientation_count(*h, cap);
  std::vector<RangeBest> best =
      h->num_vertices() <= 20 ? enumerate_best(h, {p}, total, threads)
                              : enumerate_best_general(h, {p}, total);
  auto perms = permutation_table(h->uniformity());
  return ExtremalResult{best[0].value, orientation_from_digits(h, perms, best[0].digits),
                        true, total};
}

MonotonicityReport verify_gamma_monotonicity(std::shared_ptr<const Hypergraph> h,
                                             std::uint64_t cap, unsigned threads) {
  unsigned r = h->uniformity();
  std::uint64_t total = checked_orientation_count(*h, cap);
  std::vector<unsigned> ps;
  for (unsigned p = 1; p <= r - 1; ++p) ps.push_back(p);
  std::vector<RangeBest> best = h->num_vertices() <= 20
                                    ? enumerate_best(h, ps, total, threads)
                                    : enumerate_best_general(h, ps, total);
  MonotonicityReport rep;
  rep.orientations_examined = total;
  for (const RangeBest& b : best) rep.gamma_by_p.push_back(b.value);
  for (std::size_t i = 1; i < rep.gamma_by_p.size(); ++i)
    rep.monotone = rep.monotone && rep.gamma_by_p[i - 1] <= rep.gamma_by_p[i];
  return rep;
}

void for_each_orientation(std::shared_ptr<const Hypergraph> h,
                          const std::function<void(const Orientation&)>& fn,
                          std::uint64_t cap) {
  std::uint64_t total = checked_orientation_count(*h, cap);
  unsigned radix = static_cast<unsigned>(factorial(h->uniformity()));
  auto perms = permutation_table(h->uniformity());
  std::size_t m = h->num_edges();
  std::vector<std::uint8_t> digits(m, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(orientation_from_digits(h, perms, digits));
    if (m == 0) break;
    std::size_t pos = m - 1;
    while (digits[pos] == radix - 1 && pos > 0) digits[pos--] = 0;
    if (digits[pos] == radix - 1) break;
    ++digits[pos];
  }
}

namespace {

struct RestartOutcome {
  std::size_t value = 0;
  std::uint32_t restart = 0;
  std::uint32_t step = 0;
  std::vector<std::uint8_t> digits;
  std::uint64_t evaluations = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> trace;  // (step, value)
};

// One hill-climbing restart over the digit representation. The objective is
// evaluated with the exact mask evaluator when it fits, otherwise with the
// budgeted solver (falling back to the greedy value when the budget trips;
// such values steer the walk but never become certified claims).
RestartOutcome run_restart(std::shared_ptr<const Hypergraph> h, unsigned p,
                           const SearchConfig& cfg, std::uint32_t restart,
                           const DigitMasks* table,
                           const std::vector<std::vector<std::uint8_t>>& perms) {
  const Hypergraph& g = *h;
  std::size_t m = g.num_edges();
  auto radix = static_cast<unsigned>(perms.size());
  Prng rng(Prng::derive(cfg.seed, restart));

  RestartOutcome out;
  out.restart = restart;
  std::vector<std::uint8_t> digits(m);
  for (std::size_t e = 0; e < m; ++e) digits[e] = static_cast<std::uint8_t>(rng.below(radix));

  std::vector<std::uint32_t> pm(m), tm(m);
  std::optional<GammaMaskEval> eval;
  if (table) {
    eval.emplace(static_cast<unsigned>(g.num_vertices()));
    for (std::size_t e = 0; e < m; ++e) {
      pm[e] = table->prefix[e][digits[e]];
      tm[e] = table->tail[e][digits[e]];
    }
  }

  auto objective = [&]() -> std::size_t {
    ++out.evaluations;
    if (eval) return eval->gamma_from(pm, tm, 0);
    Orientation d = orientation_from_digits(h, perms, digits);
    auto [cert, stats] = min_directed_dominating(d, p, cfg.node_budget);
    return stats.best_found;  // greedy-seeded incumbent when the budget trips
  };

  std::size_t cur = objective();
  out.value = cur;
  out.step = 0;
  out.digits = digits;
  out.trace.emplace_back(0, cur);

  std::uint32_t plateau = 0;
  for (std::uint32_t step = 1; step <= cfg.max_steps && m > 0; ++step) {
    auto e = static_cast<std::size_t>(rng.below(m));
    auto alt = static_cast<std::uint8_t>(rng.below(radix - 1));
    if (alt >= digits[e]) ++alt;
    std::uint8_t old = digits[e];
    digits[e] = alt;
    if (eval) {
      pm[e] = table->prefix[e][alt];
      tm[e] = table->tail[e][alt];
    }
    std::size_t cand = objective();
    bool accept = cand > cur || (cand == cur && plateau < cfg.plateau_limit);
    if (accept) {
      plateau = cand > cur ? 0 : plateau + 1;
      cur = cand;
      if (cur > out.value) {
        out.value = cur;
        out.step = step;
        out.digits = digits;
      }
    } else {
      digits[e] = old;
      if (eval) {
        pm[e] = table->prefix[e][old];
        tm[e] = table->tail[e][old];
      }
    }
    out.trace.emplace_back(step, cur);
  }
  return out;
}

}  // namespace

ExtremalResult gamma_upper_search(std::shared_ptr<const Hypergraph> h, unsigned p,
                                  const SearchConfig& cfg, unsigned threads,
                                  const std::function<void(std::uint32_t, std::uint32_t,
                                                           std::size_t)>& trace) {
  check_p(*h, p);
  cfg.validate();
  const Hypergraph& g = *h;
  auto perms = permutation_table(g.uniformity());
  std::optional<DigitMasks> table;
  if (g.num_vertices() <= 20) table.emplace(g, p, perms);

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  auto run = [&](std::uint32_t lo, std::uint32_t stride) {
    for (std::uint32_t i = lo; i < cfg.restarts; i += stride)
      outcomes[i] = run_restart(h, p, cfg, i, table ? &*table : nullptr, perms);
  };
  unsigned nthreads = std::max(1u, std::min<unsigned>(threads, cfg.restarts));
  if (nthreads == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(run, t, nthreads);
    for (auto& t : pool) t.join();
  }

  const RestartOutcome* best = &outcomes[0];
  std::uint64_t evals = 0;
  for (const RestartOutcome& o : outcomes) {
    evals += o.evaluations;
    if (o.value > best->value) best = &o;
  }
  if (trace)
    for (const RestartOutcome& o : outcomes)
      for (auto [step, value] : o.trace) trace(o.restart, step, value);

  Orientation witness = orientation_from_digits(h, perms, best->digits);
  // the reported value must be the witness's exact minimum, not a search-side
  // estimate
  auto [cert, stats] =
      min_directed_dominating(witness, p, std::numeric_limits<std::uint64_t>::max());
  return ExtremalResult{stats.best_found, std::move(witness), false, evals};
}

}  // namespace hdom
