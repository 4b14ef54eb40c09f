#include "hdom/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hdom/combinatorics.hpp"
#include "hdom/extremal.hpp"

namespace hdom {

namespace {

void check_r(unsigned r) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
}

}  // namespace

double log_upper_bound(std::uint64_t n, unsigned r) {
  check_r(r);
  if (n < r) throw std::invalid_argument("bound requires n >= r");
  double rr = r;
  return rr * (1.0 + std::log(static_cast<double>(n) + (rr - 1) * (rr - 1)));
}

double greedy_partition_closed_form(std::uint64_t n, unsigned r, std::uint64_t t) {
  check_r(r);
  if (t < 1) throw std::invalid_argument("threshold t must be positive");
  double rr = r;
  double shift = (rr - 1) * (rr - 1);
  return static_cast<double>(t) +
         rr * std::log((static_cast<double>(n) + shift) / (static_cast<double>(t) + shift));
}

double greedy_partition_closed_form(std::uint64_t n, unsigned r) {
  return greedy_partition_closed_form(n, r, 2ull * r - 1);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  double m = (a + b) / 2;
  double lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = g(lm), frm = g(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return adaptive_simpson(g, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double greedy_partition_integral_bound(const std::function<double(double)>& f, double t,
                                       double n, double abs_tol) {
  if (!(t >= 0) || !(n >= 0)) throw std::invalid_argument("t and n must be nonnegative");
  double b = std::max(n, t);
  if (b <= t) return t;
  auto g = [&](double x) {
    double v = f(x);
    if (!(v > 0)) throw std::invalid_argument("integrand requires positive f samples");
    return 1.0 / v;
  };
  double ga = g(t), gb = g(b), gm = g((t + b) / 2);
  double whole = (b - t) / 6 * (ga + 4 * gm + gb);
  return t + adaptive_simpson(g, t, b, ga, gm, gb, whole, abs_tol, 48);
}

namespace {

double ln_binomial(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

void check_first_moment_args(std::uint64_t n, unsigned r, std::uint64_t t) {
  check_r(r);
  if (t < r - 1) throw std::invalid_argument("t must be at least r-1");
  if (t > n) throw std::invalid_argument("t must not exceed n");
}

}  // namespace

double first_moment_log_expectation(std::uint64_t n, unsigned r, std::uint64_t t) {
  check_first_moment_args(n, r, t);
  double ln_c = ln_binomial(n, t);
  if (t == n) return 0.0;  // empty product over V \ S
  double m = static_cast<double>(n - t);
  double ln_q_inv = std::log1p(1.0 / (r - 1));  // ln(r/(r-1))
  double ln_b = ln_binomial(t, r - 1);
  // x = B ln q; ln(-x) = ln B + ln ln(r/(r-1))
  double ln_neg_x = ln_b + std::log(ln_q_inv);
  double term;  // ln(1 - e^x)
  if (ln_neg_x > 700) {
    term = 0.0;  // q^B underflows entirely; E is essentially C(n,t)
  } else {
    double x = -std::exp(ln_neg_x);
    term = x < -M_LN2 ? std::log1p(-std::exp(x)) : std::log(-std::expm1(x));
  }
  return ln_c + m * term;
}

namespace {

// RAII mpfr value.
struct Real {
  mpfr_t x;
  explicit Real(mpfr_prec_t prec) { mpfr_init2(x, prec); }
  ~Real() { mpfr_clear(x); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
};

// [lo, hi] enclosure of ln C(n, k) at the given precision.
void ln_binomial_interval(std::uint64_t n, std::uint64_t k, mpfr_prec_t prec, Real& lo,
                          Real& hi) {
  Real a(prec), b(prec), c(prec), tmp(prec);
  auto lng = [&](Real& out, std::uint64_t arg, mpfr_rnd_t rnd) {
    mpfr_set_ui(tmp.x, static_cast<unsigned long>(arg) + 1, MPFR_RNDN);  // exact
    mpfr_lngamma(out.x, tmp.x, rnd);
  };
  lng(a, n, MPFR_RNDD);
  lng(b, k, MPFR_RNDU);
  lng(c, n - k, MPFR_RNDU);
  mpfr_sub(lo.x, a.x, b.x, MPFR_RNDD);
  mpfr_sub(lo.x, lo.x, c.x, MPFR_RNDD);
  lng(a, n, MPFR_RNDU);
  lng(b, k, MPFR_RNDD);
  lng(c, n - k, MPFR_RNDD);
  mpfr_sub(hi.x, a.x, b.x, MPFR_RNDU);
  mpfr_sub(hi.x, hi.x, c.x, MPFR_RNDU);
}

enum class FmDecision { kCertified, kNotCertified, kUndecided };

// Interval test of ln E < 0 at one precision. Sound in both directions;
// kUndecided asks for more precision.
FmDecision first_moment_interval_test(std::uint64_t n, unsigned r, std::uint64_t t,
                                      const mpz_class& b_subsets, mpfr_prec_t prec) {
  std::uint64_t m = n - t;
  Real lnc_lo(prec), lnc_hi(prec);
  ln_binomial_interval(n, t, prec, lnc_lo, lnc_hi);

  // q = (r-1)/r, w = B ln q, u = e^w, v = ln(1 - u); all monotone steps, so
  // directed rounding propagates the enclosure.
  Real q_lo(prec), q_hi(prec);
  mpfr_set_ui(q_lo.x, r - 1, MPFR_RNDN);
  mpfr_div_ui(q_hi.x, q_lo.x, r, MPFR_RNDU);
  mpfr_div_ui(q_lo.x, q_lo.x, r, MPFR_RNDD);

  Real w_lo(prec), w_hi(prec);
  mpfr_log(w_lo.x, q_lo.x, MPFR_RNDD);
  mpfr_log(w_hi.x, q_hi.x, MPFR_RNDU);
  mpfr_mul_z(w_lo.x, w_lo.x, b_subsets.get_mpz_t(), MPFR_RNDD);  // negative * positive
  mpfr_mul_z(w_hi.x, w_hi.x, b_subsets.get_mpz_t(), MPFR_RNDU);

  Real u_lo(prec), u_hi(prec);
  mpfr_exp(u_lo.x, w_lo.x, MPFR_RNDD);
  mpfr_exp(u_hi.x, w_hi.x, MPFR_RNDU);

  Real v_lo(prec), v_hi(prec);
  mpfr_neg(u_hi.x, u_hi.x, MPFR_RNDN);  // exact
  mpfr_neg(u_lo.x, u_lo.x, MPFR_RNDN);
  if (mpfr_cmp_si(u_hi.x, -1) <= 0) {
    mpfr_set_inf(v_lo.x, -1);  // enclosure degenerated at this precision
  } else {
    mpfr_log1p(v_lo.x, u_hi.x, MPFR_RNDD);
  }
  mpfr_log1p(v_hi.x, u_lo.x, MPFR_RNDU);

  Real g_lo(prec), g_hi(prec);
  mpfr_mul_ui(v_lo.x, v_lo.x, static_cast<unsigned long>(m), MPFR_RNDD);
  mpfr_mul_ui(v_hi.x, v_hi.x, static_cast<unsigned long>(m), MPFR_RNDU);
  mpfr_add(g_lo.x, lnc_lo.x, v_lo.x, MPFR_RNDD);
  mpfr_add(g_hi.x, lnc_hi.x, v_hi.x, MPFR_RNDU);

  if (mpfr_sgn(g_hi.x) < 0) return FmDecision::kCertified;
  if (mpfr_sgn(g_lo.x) >= 0) return FmDecision::kNotCertified;
  return FmDecision::kUndecided;
}

// lhs = C(n,t) * (r^B - (r-1)^B)^m, rhs = r^(B m); requires B and B*m to fit
// an unsigned long.
void first_moment_sides(std::uint64_t n, unsigned r, std::uint64_t t, std::uint64_t b,
                        mpz_class& lhs, mpz_class& rhs) {
  std::uint64_t m = n - t;
  mpz_class a_pow, b_pow, diff;
  mpz_ui_pow_ui(a_pow.get_mpz_t(), r, b);
  mpz_ui_pow_ui(b_pow.get_mpz_t(), r - 1, b);
  diff = a_pow - b_pow;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, t);
  mpz_pow_ui(lhs.get_mpz_t(), diff.get_mpz_t(), m);
  lhs *= binom;
  mpz_ui_pow_ui(rhs.get_mpz_t(), r, b * m);
}

constexpr double kDirectBitsLimit = 300'000;

}  // namespace

bool first_moment_certifies(std::uint64_t n, unsigned r, std::uint64_t t) {
  check_first_moment_args(n, r, t);
  if (t == n) return false;  // E[x] = 1 exactly
  std::uint64_t m = n - t;

  mpz_class b_subsets;
  mpz_bin_uiui(b_subsets.get_mpz_t(), t, r - 1);

  bool b_fits = b_subsets.fits_ulong_p();
  if (b_fits) {
    std::uint64_t b = mpz_get_ui(b_subsets.get_mpz_t());
    double est_bits = static_cast<double>(m) * static_cast<double>(b) * std::log2(r);
    if (est_bits <= kDirectBitsLimit &&
        b <= std::numeric_limits<unsigned long>::max() / std::max<std::uint64_t>(m, 1)) {
      mpz_class lhs, rhs;
      first_moment_sides(n, r, t, b, lhs, rhs);
      return lhs < rhs;
    }
  }
  for (mpfr_prec_t prec : {192, 512, 2048, 8192, 32768}) {
    FmDecision d = first_moment_interval_test(n, r, t, b_subsets, prec);
    if (d == FmDecision::kCertified) return true;
    if (d == FmDecision::kNotCertified) return false;
  }
  // Interval arithmetic can only stall this close to equality for small
  // operands; settle it exactly.
  if (b_fits) {
    std::uint64_t b = mpz_get_ui(b_subsets.get_mpz_t());
    mpz_class lhs, rhs;
    first_moment_sides(n, r, t, b, lhs, rhs);
    return lhs < rhs;
  }
  throw std::runtime_error("first-moment comparison did not resolve");
}

FirstMomentCertificate first_moment_certificate(std::uint64_t n, unsigned r,
                                                std::uint64_t t) {
  check_first_moment_args(n, r, t);
  if (t == n) throw std::invalid_argument("t = n never certifies (E[x] = 1)");
  mpz_class b_subsets;
  mpz_bin_uiui(b_subsets.get_mpz_t(), t, r - 1);
  if (!b_subsets.fits_ulong_p())
    throw std::invalid_argument("certificate sides too large to materialize");
  FirstMomentCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.t = t;
  cert.prefix_subsets = mpz_get_ui(b_subsets.get_mpz_t());
  first_moment_sides(n, r, t, cert.prefix_subsets, cert.lhs, cert.rhs);
  return cert;
}

std::optional<std::pair<std::uint64_t, FirstMomentCertificate>> first_moment_lower_bound(
    std::uint64_t n, unsigned r) {
  check_r(r);
  if (n < r) throw std::invalid_argument("requires n >= r");
  auto cap = static_cast<std::uint64_t>(std::ceil(log_upper_bound(n, r)));
  std::uint64_t t_max = std::min<std::uint64_t>(n, cap);
  std::optional<std::uint64_t> t_star;
  for (std::uint64_t t = r - 1; t <= t_max; ++t)
    if (first_moment_certifies(n, r, t)) t_star = t;
  if (!t_star) return std::nullopt;
  return std::make_pair(*t_star, first_moment_certificate(n, r, *t_star));
}

double asymptotic_lower_constant(unsigned r) {
  check_r(r);
  double denom = 2.0 * std::log1p(1.0 / (r - 1));
  return (r - 1) / std::exp(1.0) * std::pow(denom, -1.0 / (r - 1));
}

double cover_bound(const Hypergraph& h, const std::vector<VertexSet>& cover, unsigned p,
                   const std::function<double(const Hypergraph&, unsigned)>& part_bound) {
  if (p < 1 || p > h.uniformity() - 1)
    throw std::invalid_argument("prefix length p must be in [1, r-1]");
  VertexSet seen(h.num_vertices());
  for (const VertexSet& part : cover) seen |= part;
  if (seen.size() != h.num_vertices())
    throw std::invalid_argument("parts do not cover the vertex set");
  double total = 0;
  for (const VertexSet& part : cover) total += part_bound(*h.induced(part).graph, p);
  return total;
}

std::function<double(const Hypergraph&, unsigned)> exact_part_evaluator(std::uint64_t cap) {
  return [cap](const Hypergraph& part, unsigned p) {
    auto h = std::make_shared<Hypergraph>(part);
    if (part.num_vertices() < part.uniformity())  // edgeless part: every vertex needed
      return static_cast<double>(part.num_vertices());
    return static_cast<double>(gamma_upper_exact(h, p, cap).value);
  };
}

std::function<double(const Hypergraph&, unsigned)> analytic_part_evaluator() {
  return [](const Hypergraph& part, unsigned p) {
    (void)p;
    std::uint64_t q = part.num_vertices();
    if (q < part.uniformity()) return static_cast<double>(q);
    return log_upper_bound(q, part.uniformity());
  };
}

ChromaticBound chromatic_cover_bound(const Hypergraph& h, const Coloring& coloring,
                                     unsigned p) {
  unsigned r = h.uniformity();
  if (p < 1 || p > r - 1)
    throw std::invalid_argument("prefix length p must be in [1, r-1]");
  std::size_t n = h.num_vertices();
  if (coloring.assignment.size() != n)
    throw std::invalid_argument("coloring length does not match vertex count");

  std::vector<std::vector<VertexId>> classes(coloring.num_colors);
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t c = coloring.assignment[v];
    if (c >= coloring.num_colors) throw std::invalid_argument("color id out of range");
    classes[c].push_back(v);
  }
  std::erase_if(classes, [](const auto& cls) { return cls.empty(); });

  // Proper on the complement == every class is a clique of h or has < r
  // vertices; a violating r-subset is a monochromatic complement edge.
  for (const auto& cls : classes) {
    if (cls.size() < r) continue;
    bool ok = true;
    for_each_combination(cls.size(), r, [&](const std::vector<VertexId>& pick) {
      Edge e;
      e.reserve(r);
      for (VertexId i : pick) e.push_back(cls[i]);
      if (!h.has_edge(e)) ok = false;
      return ok;
    });
    if (!ok) throw std::invalid_argument("coloring is not proper on the complement");
  }

  ChromaticBound out;
  out.classes = static_cast<unsigned>(classes.size());
  if (classes.empty()) return out;
  double rr = r;
  double shift = (rr - 1) * (rr - 1);
  for (const auto& cls : classes)
    out.sum_form += rr * (1.0 + std::log(static_cast<double>(cls.size()) + shift));
  double t = static_cast<double>(classes.size());
  out.jensen_form = rr * t * (1.0 + std::log(static_cast<double>(n) / t + shift));
  return out;
}

std::vector<BoundsRow> bounds_table(unsigned r, std::uint64_t n_from, std::uint64_t n_to) {
  check_r(r);
  std::vector<BoundsRow> rows;
  double c = asymptotic_lower_constant(r);
  for (std::uint64_t n = std::max<std::uint64_t>(n_from, r); n <= n_to; ++n) {
    BoundsRow row;
    row.n = n;
    row.thm2i_upper = log_upper_bound(n, r);
    if (n >= 2ull * r - 1) row.gpl_closed = greedy_partition_closed_form(n, r);
    auto fm = first_moment_lower_bound(n, r);
    if (fm) {
      row.t_star = fm->first;
      row.certified_lower = fm->first + 1;
    }
    row.c_info = c * std::pow(std::log(static_cast<double>(n)), 1.0 / (r - 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hdom
