#include "hdom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hdom/bounds.hpp"
#include "hdom/coloring.hpp"
#include "hdom/combinatorics.hpp"
#include "hdom/domination.hpp"
#include "hdom/extremal.hpp"
#include "hdom/prng.hpp"

namespace hdom {

void SuiteResult::check(bool ok, const std::string& what) {
  pass = pass && ok;
  lines.push_back((ok ? "ok   " : "FAIL ") + what);
}

namespace {

std::shared_ptr<const Hypergraph> complete(std::size_t n, unsigned r) {
  return std::make_shared<Hypergraph>(Hypergraph::complete(n, r));
}

// Independent brute-force minimum: tests subsets in increasing size with a
// from-scratch domination check straight off the definition.
bool naive_dominates(const Orientation& d, const std::vector<VertexId>& s, unsigned p) {
  const Hypergraph& h = d.hypergraph();
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    if (std::find(s.begin(), s.end(), u) != s.end()) continue;
    bool covered = false;
    for (std::size_t ei = 0; ei < h.num_edges() && !covered; ++ei) {
      const Edge& ord = d.order(ei);
      bool u_in_tail = false;
      for (unsigned j = p; j < ord.size(); ++j) u_in_tail = u_in_tail || ord[j] == u;
      if (!u_in_tail) continue;
      bool prefix_in = true;
      for (unsigned j = 0; j < p && prefix_in; ++j)
        prefix_in = std::find(s.begin(), s.end(), ord[j]) != s.end();
      covered = prefix_in;
    }
    if (!covered) return false;
  }
  return true;
}

std::size_t naive_gamma(const Orientation& d, unsigned p) {
  std::size_t n = d.hypergraph().num_vertices();
  for (std::size_t k = 0; k <= n; ++k) {
    bool found = false;
    for_each_combination(n, static_cast<unsigned>(k), [&](const std::vector<VertexId>& c) {
      if (naive_dominates(d, c, p)) found = true;
      return !found;
    });
    if (found) return k;
  }
  return n;
}

std::uint64_t prefix_degree_sum(const Orientation& d, unsigned p) {
  std::size_t n = d.hypergraph().num_vertices();
  std::uint64_t total = 0;
  for_each_combination(n, p, [&](const std::vector<VertexId>& c) {
    total += d.directed_degree(VertexSet(n, c));
  });
  return total;
}

Hypergraph random_instance(Prng& rng, unsigned max_n, unsigned max_r) {
  unsigned r = 2 + static_cast<unsigned>(rng.below(max_r - 1));
  unsigned n = r + static_cast<unsigned>(rng.below(max_n - r + 1));
  std::uint64_t all = binomial_exact(n, r);
  std::uint64_t m = rng.below(all + 1);
  return Hypergraph::random(n, r, m, rng.next());
}

void suite_prefix_identity(SuiteResult& res, const SuiteOptions& opt) {
  for (auto [n, r] : {std::pair<std::size_t, unsigned>{4, 3}, {5, 2}}) {
    auto h = complete(n, r);
    bool all_ok = true;
    for_each_orientation(
        h,
        [&](const Orientation& d) {
          for (unsigned p = 1; p <= r - 1; ++p)
            all_ok = all_ok && prefix_degree_sum(d, p) == h->num_edges();
        },
        opt.cap);
    std::ostringstream what;
    what << "prefix partition identity on all orientations of H(" << n << "," << r << ")";
    res.check(all_ok, what.str());
  }

  unsigned samples = opt.samples ? opt.samples : 10000;
  Prng rng(opt.seed);
  bool all_ok = true;
  for (unsigned i = 0; i < samples && all_ok; ++i) {
    auto h = std::make_shared<Hypergraph>(random_instance(rng, 10, 4));
    Orientation d = Orientation::random(h, rng.next());
    unsigned r = h->uniformity();
    unsigned p = 1 + static_cast<unsigned>(rng.below(r - 1));
    all_ok = prefix_degree_sum(d, p) == h->num_edges();
  }
  res.check(all_ok, "prefix partition identity on " + std::to_string(samples) +
                        " random instances (n <= 10, r <= 4)");

  // small complete grid, every p, a few random orientations each
  bool grid_ok = true;
  for (unsigned r = 2; r <= 4; ++r)
    for (std::size_t n = r; n <= 6; ++n) {
      auto h = complete(n, r);
      for (std::uint64_t s = 0; s < 5; ++s) {
        Orientation d = Orientation::random(h, Prng::derive(opt.seed, s));
        for (unsigned p = 1; p <= r - 1; ++p)
          grid_ok = grid_ok && prefix_degree_sum(d, p) == h->num_edges();
      }
    }
  res.check(grid_ok, "prefix partition identity on the complete grid n <= 6, r <= 4");
}

void suite_averaging(SuiteResult& res, const SuiteOptions& opt) {
  // r * max directed degree >= n - r + 1, integer arithmetic only
  for (auto [n, r] : {std::pair<std::size_t, unsigned>{4, 3}, {5, 2}}) {
    auto h = complete(n, r);
    bool all_ok = true;
    for_each_orientation(
        h,
        [&](const Orientation& d) {
          auto [arg, deg] = d.max_directed_degree(r - 1);
          all_ok = all_ok && r * deg >= n - r + 1;
        },
        opt.cap);
    std::ostringstream what;
    what << "averaging bound on all orientations of H(" << n << "," << r << ")";
    res.check(all_ok, what.str());
  }
  unsigned samples = opt.samples ? opt.samples : 1000;
  auto h = complete(8, 3);
  bool ok = true;
  for (unsigned i = 0; i < samples; ++i) {
    Orientation d = Orientation::random(h, Prng::derive(opt.seed, i));
    auto [arg, deg] = d.max_directed_degree(2);
    ok = ok && 3 * deg >= 8 - 3 + 1;
  }
  res.check(ok, "averaging bound on " + std::to_string(samples) +
                    " random orientations of H(8,3)");
}

void suite_eq1(SuiteResult& res, const SuiteOptions& opt) {
  std::size_t n = opt.n ? opt.n : 4;
  unsigned r = opt.r ? opt.r : 3;
  auto rep = verify_gamma_monotonicity(complete(n, r), opt.cap, opt.threads);
  std::ostringstream what;
  what << "H(" << n << "," << r << "): gamma-upper by p = (";
  for (std::size_t i = 0; i < rep.gamma_by_p.size(); ++i)
    what << (i ? ", " : "") << rep.gamma_by_p[i];
  what << ") over " << rep.orientations_examined << " orientations, nondecreasing";
  res.check(rep.monotone, what.str());
}

void suite_greedy_bound(SuiteResult& res, const SuiteOptions& opt) {
  unsigned samples = opt.samples ? opt.samples : 100;
  bool valid_ok = true, bound_ok = true;
  std::uint64_t runs = 0;
  for (unsigned r : {2u, 3u, 4u}) {
    for (std::size_t n = r; n <= 30; ++n) {
      auto h = complete(n, r);
      double bound = log_upper_bound(n, r);
      for (unsigned i = 0; i < samples; ++i) {
        Orientation d = Orientation::random(h, Prng::derive(opt.seed + r * 1000 + n, i));
        for (unsigned p = 1; p <= r - 1; ++p) {
          DominationCertificate cert = greedy_dominating_set(d, p);
          valid_ok = valid_ok && verify_certificate(d, cert, p);
          bound_ok = bound_ok && static_cast<double>(cert.dominating_set.size()) < bound;
          ++runs;
        }
      }
    }
  }
  res.check(valid_ok, "greedy output passes the domination checker (" +
                          std::to_string(runs) + " runs)");
  res.check(bound_ok, "greedy size < r(1+ln(n+(r-1)^2)) on every run");
}

void suite_oracle(SuiteResult& res, const SuiteOptions& opt) {
  unsigned samples = opt.samples ? opt.samples : 200;
  Prng rng(opt.seed);
  bool ok = true;
  for (unsigned i = 0; i < samples && ok; ++i) {
    auto h = std::make_shared<Hypergraph>(random_instance(rng, 8, 4));
    Orientation d = Orientation::random(h, rng.next());
    unsigned p = 1 + static_cast<unsigned>(rng.below(h->uniformity() - 1));
    auto [cert, stats] = min_directed_dominating(d, p);
    ok = stats.proven_optimal && stats.best_found == naive_gamma(d, p) &&
         verify_certificate(d, cert, p);
  }
  res.check(ok, "exact solver matches the 2^n oracle on " + std::to_string(samples) +
                    " random instances (n <= 8)");
}

void suite_superset(SuiteResult& res, const SuiteOptions& opt) {
  unsigned samples = opt.samples ? opt.samples : 300;
  Prng rng(opt.seed);
  bool closure_ok = true, nbhd_ok = true, core_ok = true, undirected_ok = true;
  for (unsigned i = 0; i < samples; ++i) {
    auto h = std::make_shared<Hypergraph>(random_instance(rng, 8, 4));
    std::size_t n = h->num_vertices();
    unsigned r = h->uniformity();
    Orientation d = Orientation::random(h, rng.next());
    unsigned p = 1 + static_cast<unsigned>(rng.below(r - 1));

    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v)
      if (rng.below(2)) s.insert(v);
    if (is_directed_p_dominating(d, s, p)) {
      VertexSet sup = s;
      for (VertexId v = 0; v < n; ++v)
        if (rng.below(2)) sup.insert(v);
      closure_ok = closure_ok && is_directed_p_dominating(d, sup, p);
      undirected_ok = undirected_ok && is_p_dominating_undirected(*h, s, p);
    }

    if (n >= p) {
      VertexSet a(n);
      while (a.size() < p) a.insert(static_cast<VertexId>(rng.below(n)));
      VertexSet nbhd = d.directed_neighborhood(a);
      nbhd_ok = nbhd_ok && (nbhd & a).empty();
    }

    auto [cert, stats] = min_directed_dominating(d, p);
    core_ok = core_ok && undominatable_core(d, p).is_subset_of(cert.dominating_set);
  }
  res.check(closure_ok, "directed domination closed under supersets");
  res.check(undirected_ok, "directed p-dominating sets p-dominate undirected");
  res.check(nbhd_ok, "directed neighborhood disjoint from its set");
  res.check(core_ok, "undominatable core contained in optimal sets");
}

void suite_first_moment(SuiteResult& res, const SuiteOptions& opt) {
  // pinned instance: n=21, r=2, t=2 certifies via 210 * 3^19 < 2^38
  FirstMomentCertificate cert = first_moment_certificate(21, 2, 2);
  mpz_class want_lhs = 210 * mpz_class("1162261467");  // 3^19
  mpz_class want_rhs;
  mpz_ui_pow_ui(want_rhs.get_mpz_t(), 2, 38);
  res.check(cert.lhs == want_lhs && cert.rhs == want_rhs && cert.lhs < cert.rhs,
            "certificate at (n=21, r=2, t=2): 210*3^19 < 2^38");
  res.check(first_moment_certifies(21, 2, 2), "(21,2): t=2 certifies");
  res.check(!first_moment_certifies(20, 2, 2), "(20,2): t=2 does not certify");
  res.check(first_moment_log_expectation(20, 2, 2) > 0,
            "(20,2): float E[x] above 1");

  auto fm21 = first_moment_lower_bound(21, 2);
  res.check(fm21 && fm21->first == 2, "(21,2): t_star = 2, certified lower bound 3");

  // integer and float certify/not-certify agree wherever the float margin
  // is meaningful
  std::uint64_t max_n = opt.samples ? opt.samples : 1000;
  bool agree = true;
  std::uint64_t checked = 0;
  for (unsigned r : {2u, 3u, 4u}) {
    for (std::uint64_t n = r; n <= max_n && agree; ++n) {
      for (std::uint64_t t = r - 1; t <= std::min<std::uint64_t>(n, 30); ++t) {
        double ln_e = first_moment_log_expectation(n, r, t);
        if (std::abs(ln_e) <= 1e-6) continue;
        ++checked;
        if (first_moment_certifies(n, r, t) != (ln_e < 0)) {
          agree = false;
          std::ostringstream bad;
          bad << "disagreement at n=" << n << " r=" << r << " t=" << t;
          res.lines.push_back(bad.str());
          break;
        }
      }
    }
  }
  res.check(agree, "integer certificate agrees with float sign on " +
                       std::to_string(checked) + " grid points (r<=4, t<=30, n<=" +
                       std::to_string(max_n) + ")");
}

void suite_sandwich(SuiteResult& res, const SuiteOptions& opt) {
  struct Case {
    std::size_t n;
    unsigned r;
  };
  for (Case c : {Case{3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}}) {
    auto h = complete(c.n, c.r);
    for (unsigned p = 1; p <= c.r - 1; ++p) {
      ExtremalResult ex = gamma_upper_exact(h, p, opt.cap, opt.threads);
      double upper = log_upper_bound(c.n, c.r);
      bool ok = static_cast<double>(ex.value) < upper;
      std::uint64_t lower = 1;
      if (p == c.r - 1) {
        auto fm = first_moment_lower_bound(c.n, c.r);
        if (fm) lower = fm->first + 1;
      }
      ok = ok && lower <= ex.value;
      std::ostringstream what;
      what << "H(" << c.n << "," << c.r << ") p=" << p << ": " << lower
           << " <= gamma-upper " << ex.value << " < " << upper;
      res.check(ok, what.str());
    }
  }
}

void suite_cover_chi(SuiteResult& res, const SuiteOptions& opt) {
  auto h4 = complete(4, 3);
  ExtremalResult exact2 = gamma_upper_exact(h4, 2, opt.cap, opt.threads);
  auto vs = [](std::initializer_list<VertexId> l) { return VertexSet(4, l); };
  std::vector<std::vector<VertexSet>> covers = {
      {vs({0, 1, 2, 3})},
      {vs({0, 1, 2}), vs({1, 2, 3})},
      {vs({0, 1, 2}), vs({0, 1, 3}), vs({2, 3})},
      {vs({0}), vs({1}), vs({2}), vs({3})},
      {vs({0, 1}), vs({2, 3})},
      {vs({0, 1, 2, 3}), vs({1, 2})},
  };
  bool cover_ok = true;
  for (const auto& cover : covers) {
    double bound = cover_bound(*h4, cover, 2, exact_part_evaluator(opt.cap));
    cover_ok = cover_ok && bound >= static_cast<double>(exact2.value);
  }
  res.check(cover_ok, "cover bound with exact parts dominates gamma-upper on " +
                          std::to_string(covers.size()) + " covers of H(4,3)");

  // complete hypergraph: complement is edgeless, one class, both forms
  // collapse to the logarithmic bound
  bool collapse_ok = true;
  for (auto [n, r] : {std::pair<std::size_t, unsigned>{6, 3}, {9, 4}, {7, 2}}) {
    auto h = complete(n, r);
    Coloring c = greedy_complement_coloring(*h);
    ChromaticBound b = chromatic_cover_bound(*h, c, 1);
    double want = log_upper_bound(n, r);
    collapse_ok = collapse_ok && c.num_colors == 1 &&
                  std::abs(b.jensen_form - want) <= 1e-12 * want &&
                  std::abs(b.sum_form - want) <= 1e-12 * want;
  }
  res.check(collapse_ok, "complete hypergraph: chromatic bound collapses to the "
                         "logarithmic bound (rel 1e-12)");

  unsigned samples = opt.samples ? opt.samples : 1000;
  Prng rng(opt.seed);
  bool jensen_ok = true;
  for (unsigned i = 0; i < samples; ++i) {
    Hypergraph h = random_instance(rng, 9, 3);
    Coloring c = greedy_complement_coloring(h);
    // randomly split classes; refinements stay proper on the complement
    std::uint32_t extra = 0;
    Coloring split = c;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
      if (rng.below(3) == 0) split.assignment[v] = c.num_colors + extra++;
    split.num_colors = c.num_colors + extra;
    ChromaticBound b = chromatic_cover_bound(h, split, 1);
    jensen_ok = jensen_ok && b.sum_form <= b.jensen_form + 1e-9;
  }
  res.check(jensen_ok, "sum form <= Jensen form on " + std::to_string(samples) +
                           " random complement colorings");
}

void suite_determinism(SuiteResult& res, const SuiteOptions& opt) {
  auto h = complete(4, 3);
  ExtremalResult a = gamma_upper_exact(h, 2, opt.cap, 1);
  ExtremalResult b = gamma_upper_exact(h, 2, opt.cap, 3);
  ExtremalResult c = gamma_upper_exact(h, 2, opt.cap, 8);
  res.check(a.value == b.value && b.value == c.value &&
                a.witness == b.witness && b.witness == c.witness,
            "exact enumeration independent of thread count");

  SearchConfig cfg;
  cfg.seed = opt.seed;
  cfg.restarts = 6;
  cfg.max_steps = 60;
  ExtremalResult s1 = gamma_upper_search(h, 2, cfg, 1);
  ExtremalResult s2 = gamma_upper_search(h, 2, cfg, 4);
  res.check(s1.value == s2.value && s1.witness == s2.witness &&
                s1.orientations_examined == s2.orientations_examined,
            "search independent of thread count for a fixed config");

  Hypergraph r1 = Hypergraph::random(9, 3, 20, opt.seed);
  Hypergraph r2 = Hypergraph::random(9, 3, 20, opt.seed);
  auto hh = std::make_shared<Hypergraph>(r1);
  res.check(r1 == r2 && Orientation::random(hh, opt.seed) == Orientation::random(hh, opt.seed),
            "seeded generation reproducible");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"prefix-identity", "averaging", "eq1",      "greedy-bound", "oracle",
          "superset",        "first-moment", "sandwich", "cover-chi",    "determinism"};
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteResult res;
  res.name = name;
  if (name == "all") {
    for (const std::string& sub : suite_names()) {
      SuiteResult r = run_suite(sub, opt);
      res.pass = res.pass && r.pass;
      for (std::string& line : r.lines) res.lines.push_back("[" + sub + "] " + line);
    }
    return res;
  }
  if (name == "prefix-identity") suite_prefix_identity(res, opt);
  else if (name == "averaging") suite_averaging(res, opt);
  else if (name == "eq1") suite_eq1(res, opt);
  else if (name == "greedy-bound") suite_greedy_bound(res, opt);
  else if (name == "oracle") suite_oracle(res, opt);
  else if (name == "superset") suite_superset(res, opt);
  else if (name == "first-moment") suite_first_moment(res, opt);
  else if (name == "sandwich") suite_sandwich(res, opt);
  else if (name == "cover-chi") suite_cover_chi(res, opt);
  else if (name == "determinism") suite_determinism(res, opt);
  else throw std::invalid_argument("unknown suite '" + name + "'");
  return res;
}

}  // namespace hdom
