#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "hdom/orientation.hpp"
#include "hdom/vertex_set.hpp"

namespace hdom {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// A dominating set together with, for every vertex outside it, an edge whose
// order places that vertex after the first p positions and whose first p
// vertices all lie in the set.
struct DominationCertificate {
  VertexSet dominating_set;
  std::map<VertexId, std::uint32_t> witnesses;
};

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  std::size_t best_found = 0;
  bool proven_optimal = false;
};

bool is_directed_p_dominating(const Orientation& d, const VertexSet& s, unsigned p);

// As above but producing witnesses; nullopt when s does not dominate.
std::optional<DominationCertificate> certify_directed_p_dominating(const Orientation& d,
                                                                   const VertexSet& s,
                                                                   unsigned p);

// Independent re-check of a certificate: witness edges are validated one by
// one against the orientation, and coverage of V \ S is confirmed.
bool verify_certificate(const Orientation& d, const DominationCertificate& cert, unsigned p);

// Vertices that never appear after the first p positions of any edge; they
// belong to every directed p-dominating set.
VertexSet undominatable_core(const Orientation& d, unsigned p);

// Greedy deletion scheme: repeatedly take the p-set with the largest directed
// neighborhood in the residual induced orientation, move it into the solution
// and delete it together with its neighborhood. Always returns a valid
// directed p-dominating set.
DominationCertificate greedy_dominating_set(const Orientation& d, unsigned p);

// Exact minimum via branch and bound. Seeds the incumbent with the greedy
// solution, forces the undominatable core, branches on the lowest-index
// uncovered vertex. Budget exhaustion is reported through
// stats.proven_optimal == false; the returned set is the best incumbent.
std::pair<DominationCertificate, SolveStats> min_directed_dominating(
    const Orientation& d, unsigned p, std::uint64_t node_budget = kDefaultNodeBudget);

bool is_p_dominating_undirected(const Hypergraph& h, const VertexSet& s, unsigned p);

// Exact minimum by subset search in increasing size; intended for small n.
std::size_t gamma_p_undirected(const Hypergraph& h, unsigned p);

}  // namespace hdom
