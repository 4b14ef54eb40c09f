#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hdom/coloring.hpp"
#include "hdom/hypergraph.hpp"

namespace hdom {

// r(1 + ln(n + (r-1)^2)): strict upper bound on the upper directed
// p-domination number of the complete r-uniform hypergraph, any p in [1,r-1].
double log_upper_bound(std::uint64_t n, unsigned r);

// t + r ln((n+(r-1)^2)/(t+(r-1)^2)); the greedy-partition bound with
// f(x) = (x+(r-1)^2)/r before the final relaxation. Evaluated as the
// antiderivative form for any n, also below t.
double greedy_partition_closed_form(std::uint64_t n, unsigned r);
double greedy_partition_closed_form(std::uint64_t n, unsigned r, std::uint64_t t);

// t + integral of 1/f over [t, max(n,t)] by adaptive quadrature. f must be
// positive nondecreasing; non-positive samples are rejected.
double greedy_partition_integral_bound(const std::function<double(double)>& f, double t,
                                       double n, double abs_tol = 1e-9);

// ln E[x] for the number x of directed (r-1)-dominating t-sets under a
// uniformly random orientation of the complete hypergraph:
// ln C(n,t) + (n-t) ln(1 - q^B), q = (r-1)/r, B = C(t, r-1).
// Advisory floating-point value; certification is integer-exact.
double first_moment_log_expectation(std::uint64_t n, unsigned r, std::uint64_t t);

// Exact decision of E[x] < 1, equivalently
//   C(n,t) * (r^B - (r-1)^B)^(n-t)  <  r^(B*(n-t)).
// Decided by direct big-integer comparison when small enough, otherwise by
// interval arithmetic at escalating precision (never approximate: undecided
// intervals escalate and finally fall back to the integer comparison).
bool first_moment_certifies(std::uint64_t n, unsigned r, std::uint64_t t);

// Proof record for one certified t: both sides of the integer inequality.
struct FirstMomentCertificate {
  std::uint64_t n = 0;
  unsigned r = 0;
  std::uint64_t t = 0;
  std::uint64_t prefix_subsets = 0;  // B = C(t, r-1)
  mpz_class lhs, rhs;                // lhs < rhs certifies E[x] < 1
};

FirstMomentCertificate first_moment_certificate(std::uint64_t n, unsigned r, std::uint64_t t);

// Largest t in [r-1, ceil(log_upper_bound)] whose expectation certifies,
// with its integer proof. An orientation then admits no dominating set of
// size t (nor smaller, by superset closure), so the upper directed
// (r-1)-domination number is at least t+1. nullopt when no t certifies.
std::optional<std::pair<std::uint64_t, FirstMomentCertificate>> first_moment_lower_bound(
    std::uint64_t n, unsigned r);

// c(r) = ((r-1)/e) * (2 ln(r/(r-1)))^(-1/(r-1)); informational constant of
// the asymptotic lower bound c(r) (ln n)^(1/(r-1)), never certified.
double asymptotic_lower_constant(unsigned r);

// Sum of per-part bounds over a (not necessarily disjoint) cover of V;
// upper-bounds the whole when the per-part evaluator does.
double cover_bound(const Hypergraph& h, const std::vector<VertexSet>& cover, unsigned p,
                   const std::function<double(const Hypergraph&, unsigned)>& part_bound);

// Part evaluator: exact enumeration value of the part (refuses over cap).
std::function<double(const Hypergraph&, unsigned)> exact_part_evaluator(std::uint64_t cap);
// Part evaluator: q for parts with fewer than r vertices, else log_upper_bound.
std::function<double(const Hypergraph&, unsigned)> analytic_part_evaluator();

struct ChromaticBound {
  double sum_form = 0;     // sum_i r(1+ln(q_i+(r-1)^2)), valid for any proper coloring
  double jensen_form = 0;  // r t (1+ln(n/t+(r-1)^2)); sum_form <= jensen_form
  unsigned classes = 0;
};

// Aggregated upper bound from a proper coloring of the complement (classes
// are cliques of H or small sets). Throws if some class of size >= r is not
// a clique, i.e. the coloring is improper on the complement.
ChromaticBound chromatic_cover_bound(const Hypergraph& h, const Coloring& coloring,
                                     unsigned p);

struct BoundsRow {
  std::uint64_t n = 0;
  double thm2i_upper = 0;
  std::optional<double> gpl_closed;
  std::optional<std::uint64_t> t_star;
  std::optional<std::uint64_t> certified_lower;  // t_star + 1
  double c_info = 0;                             // c(r) (ln n)^(1/(r-1))
};

std::vector<BoundsRow> bounds_table(unsigned r, std::uint64_t n_from, std::uint64_t n_to);

}  // namespace hdom
