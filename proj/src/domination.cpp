#include "hdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hdom/combinatorics.hpp"

namespace hdom {

namespace {

void check_p(const Hypergraph& h, unsigned p) {
  if (p < 1 || p > h.uniformity() - 1)
    throw std::invalid_argument("prefix length p must be in [1, r-1]");
}

// Smallest witness edge for u under S, or -1. A witness has u after the
// first p positions and its first p vertices inside S.
std::int64_t find_witness(const Orientation& d, const VertexSet& s, unsigned p, VertexId u) {
  const Hypergraph& h = d.hypergraph();
  for (std::uint32_t ei : h.incident_edges(u)) {
    const Edge& ord = d.order(ei);
    bool ok = true;
    for (unsigned j = 0; j < p && ok; ++j) ok = ord[j] != u && s.contains(ord[j]);
    if (ok) return ei;
  }
  return -1;
}

}  // namespace

bool is_directed_p_dominating(const Orientation& d, const VertexSet& s, unsigned p) {
  const Hypergraph& h = d.hypergraph();
  check_p(h, p);
  if (s.universe() != h.num_vertices())
    throw std::invalid_argument("vertex set universe does not match hypergraph");
  for (VertexId u = 0; u < h.num_vertices(); ++u)
    if (!s.contains(u) && find_witness(d, s, p, u) < 0) return false;
  return true;
}

std::optional<DominationCertificate> certify_directed_p_dominating(const Orientation& d,
                                                                   const VertexSet& s,
                                                                   unsigned p) {
  const Hypergraph& h = d.hypergraph();
  check_p(h, p);
  DominationCertificate cert{s, {}};
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    if (s.contains(u)) continue;
    std::int64_t w = find_witness(d, s, p, u);
    if (w < 0) return std::nullopt;
    cert.witnesses[u] = static_cast<std::uint32_t>(w);
  }
  return cert;
}

bool verify_certificate(const Orientation& d, const DominationCertificate& cert, unsigned p) {
  const Hypergraph& h = d.hypergraph();
  check_p(h, p);
  if (cert.dominating_set.universe() != h.num_vertices()) return false;
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    if (cert.dominating_set.contains(u)) continue;
    auto it = cert.witnesses.find(u);
    if (it == cert.witnesses.end() || it->second >= h.num_edges()) return false;
    const Edge& ord = d.order(it->second);
    unsigned pos = h.uniformity();
    for (unsigned j = 0; j < ord.size(); ++j)
      if (ord[j] == u) pos = j;
    if (pos < p || pos == h.uniformity()) return false;  // u absent or inside the prefix
    for (unsigned j = 0; j < p; ++j)
      if (!cert.dominating_set.contains(ord[j])) return false;
  }
  return true;
}

VertexSet undominatable_core(const Orientation& d, unsigned p) {
  const Hypergraph& h = d.hypergraph();
  check_p(h, p);
  VertexSet core(h.num_vertices());
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    bool escapable = false;
    for (std::uint32_t ei : h.incident_edges(u)) {
      if (d.position_of(ei, u) >= p) {
        escapable = true;
        break;
      }
    }
    if (!escapable) core.insert(u);
  }
  return core;
}

namespace {

// ---- greedy, mask fast path (n <= 64) ----

std::uint64_t mask_of(const Edge& e) {
  std::uint64_t m = 0;
  for (VertexId v : e) m |= std::uint64_t{1} << v;
  return m;
}

// lex-smaller means owning the lowest differing bit
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (!diff) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

VertexSet greedy_masks(const Orientation& d, unsigned p) {
  const Hypergraph& h = d.hypergraph();
  std::size_t n = h.num_vertices();
  unsigned r = h.uniformity();
  std::size_t m = h.num_edges();

  std::vector<std::uint64_t> edge_mask(m), prefix_mask(m), tail_mask(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& ord = d.order(i);
    std::uint64_t pm = 0;
    for (unsigned j = 0; j < p; ++j) pm |= std::uint64_t{1} << ord[j];
    prefix_mask[i] = pm;
    edge_mask[i] = mask_of(ord);
    tail_mask[i] = edge_mask[i] & ~pm;
  }

  std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::uint64_t live = full, sol = 0;
  std::vector<std::uint32_t> alive(m);
  for (std::size_t i = 0; i < m; ++i) alive[i] = static_cast<std::uint32_t>(i);

  std::unordered_map<std::uint64_t, std::uint64_t> nbr;  // prefix set -> tail union
  while (live) {
    if (static_cast<std::size_t>(std::popcount(live)) < 2u * r - 1) break;
    // keep only edges fully inside the residual set
    std::size_t w = 0;
    for (std::uint32_t ei : alive)
      if (!(edge_mask[ei] & ~live)) alive[w++] = ei;
    alive.resize(w);
    if (alive.empty()) break;  // no p-set has positive gain

    nbr.clear();
    for (std::uint32_t ei : alive) nbr[prefix_mask[ei]] |= tail_mask[ei];
    std::uint64_t best_a = 0, best_n = 0;
    int best_gain = -1;
    for (const auto& [a, nb] : nbr) {
      int gain = std::popcount(nb);
      if (gain > best_gain || (gain == best_gain && mask_lex_less(a, best_a))) {
        best_gain = gain;
        best_a = a;
        best_n = nb;
      }
    }
    sol |= best_a;
    live &= ~(best_a | best_n);
  }
  sol |= live;  // leftover block (or residue with no induced edges)
  return VertexSet::from_word(n, sol);
}

// ---- greedy, generic path ----

VertexSet greedy_generic(const Orientation& d, unsigned p) {
  const Hypergraph& h = d.hypergraph();
  std::size_t n = h.num_vertices();
  unsigned r = h.uniformity();
  std::size_t m = h.num_edges();

  VertexSet live(n), sol(n);
  for (VertexId v = 0; v < n; ++v) live.insert(v);
  std::vector<std::uint32_t> alive(m);
  for (std::size_t i = 0; i < m; ++i) alive[i] = static_cast<std::uint32_t>(i);

  while (!live.empty()) {
    if (live.size() < 2u * r - 1) break;
    std::size_t w = 0;
    for (std::uint32_t ei : alive) {
      bool inside = true;
      for (VertexId v : h.edge(ei)) inside = inside && live.contains(v);
      if (inside) alive[w++] = ei;
    }
    alive.resize(w);
    if (alive.empty()) break;

    std::map<std::vector<VertexId>, VertexSet> nbr;
    for (std::uint32_t ei : alive) {
      const Edge& ord = d.order(ei);
      std::vector<VertexId> key(ord.begin(), ord.begin() + p);
      std::sort(key.begin(), key.end());
      auto [it, fresh] = nbr.try_emplace(std::move(key), VertexSet(n));
      for (unsigned j = p; j < r; ++j) it->second.insert(ord[j]);
    }
    const std::vector<VertexId>* best_a = nullptr;
    const VertexSet* best_n = nullptr;
    std::size_t best_gain = 0;
    for (const auto& [a, nb] : nbr) {
      std::size_t gain = nb.size();
      if (!best_a || gain > best_gain) {  // map order is lexicographic, first max wins ties
        best_a = &a;
        best_n = &nb;
        best_gain = gain;
      }
    }
    for (VertexId v : *best_a) {
      sol.insert(v);
      live.erase(v);
    }
    best_n->for_each([&](VertexId v) { live.erase(v); });
  }
  sol |= live;
  return sol;
}

}  // namespace

DominationCertificate greedy_dominating_set(const Orientation& d, unsigned p) {
  const Hypergraph& h = d.hypergraph();
  check_p(h, p);
  VertexSet s = h.num_vertices() <= 64 ? greedy_masks(d, p) : greedy_generic(d, p);
  auto cert = certify_directed_p_dominating(d, s, p);
  if (!cert) throw std::logic_error("greedy produced a non-dominating set");
  return *cert;
}

namespace {

struct BranchState {
  const Orientation& d;
  const Hypergraph& h;
  unsigned p;
  std::size_t n;
  std::uint64_t budget;
  std::size_t core_size;
  std::size_t floor_bound;  // min(p, n): final set size when V \ S stays nonempty

  SolveStats stats;
  bool aborted = false;
  VertexSet best_set;
  std::size_t best_size;

  // scratch
  std::vector<std::uint32_t> prefix_ok;  // per edge: 1 if first p positions all in S

  BranchState(const Orientation& d_, unsigned p_, std::uint64_t budget_)
      : d(d_), h(d_.hypergraph()), p(p_), n(h.num_vertices()), budget(budget_),
        best_set(n), best_size(0) {}

  void refresh_prefixes(const VertexSet& s) {
    prefix_ok.assign(h.num_edges(), 1);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      const Edge& ord = d.order(i);
      for (unsigned j = 0; j < p; ++j)
        if (!s.contains(ord[j])) {
          prefix_ok[i] = 0;
          break;
        }
    }
  }

  // lowest-index vertex not in S and without a witness, or n if none
  VertexId first_uncovered(const VertexSet& s) {
    refresh_prefixes(s);
    for (VertexId u = 0; u < n; ++u) {
      if (s.contains(u)) continue;
      bool covered = false;
      for (std::uint32_t ei : h.incident_edges(u)) {
        if (prefix_ok[ei] && d.position_of(ei, u) >= p) {
          covered = true;
          break;
        }
      }
      if (!covered) return u;
    }
    return static_cast<VertexId>(n);
  }

  void recurse(VertexSet& s, VertexSet& forbidden, std::size_t s_size) {
    if (aborted) return;
    if (++stats.nodes_explored > budget) {
      aborted = true;
      return;
    }
    VertexId u = first_uncovered(s);
    if (u == n) {
      if (s_size < best_size) {
        best_size = s_size;
        best_set = s;
      }
      return;
    }
    std::size_t lower = std::max({s_size + 1, core_size, floor_bound});
    if (lower >= best_size) return;

    // candidates: u itself plus vertices of p-prefixes of edges that could witness u
    VertexSet cand(n);
    if (!forbidden.contains(u)) cand.insert(u);
    for (std::uint32_t ei : h.incident_edges(u)) {
      if (d.position_of(ei, u) < p) continue;
      const Edge& ord = d.order(ei);
      for (unsigned j = 0; j < p; ++j) {
        VertexId v = ord[j];
        if (!s.contains(v) && !forbidden.contains(v)) cand.insert(v);
      }
    }
    std::vector<VertexId> order = cand.members();
    for (VertexId v : order) {
      s.insert(v);
      recurse(s, forbidden, s_size + 1);
      s.erase(v);
      if (aborted) return;
      forbidden.insert(v);
    }
    for (VertexId v : order) forbidden.erase(v);
  }
};

}  // namespace

std::pair<DominationCertificate, SolveStats> min_directed_dominating(const Orientation& d,
                                                                     unsigned p,
                                                                     std::uint64_t node_budget) {
  const Hypergraph& h = d.hypergraph();
  check_p(h, p);
  std::size_t n = h.num_vertices();

  BranchState st(d, p, node_budget);
  DominationCertificate incumbent = greedy_dominating_set(d, p);
  st.best_set = incumbent.dominating_set;
  st.best_size = st.best_set.size();

  VertexSet core = undominatable_core(d, p);
  st.core_size = core.size();
  st.floor_bound = std::min<std::size_t>(p, n);

  VertexSet s = core;
  VertexSet forbidden(n);
  std::size_t core_sz = core.size();
  if (st.first_uncovered(s) == n) {
    // the forced core already dominates, and it is contained in every solution
    if (core_sz <= st.best_size) {
      st.best_size = core_sz;
      st.best_set = s;
    }
    st.stats.proven_optimal = true;
  } else {
    st.recurse(s, forbidden, core_sz);
    st.stats.proven_optimal = !st.aborted;
  }
  st.stats.best_found = st.best_size;

  auto cert = certify_directed_p_dominating(d, st.best_set, p);
  if (!cert) throw std::logic_error("solver incumbent failed re-verification");
  return {*cert, st.stats};
}

bool is_p_dominating_undirected(const Hypergraph& h, const VertexSet& s, unsigned p) {
  check_p(h, p);
  if (s.universe() != h.num_vertices())
    throw std::invalid_argument("vertex set universe does not match hypergraph");
  for (VertexId u = 0; u < h.num_vertices(); ++u) {
    if (s.contains(u)) continue;
    bool ok = false;
    for (std::uint32_t ei : h.incident_edges(u)) {
      unsigned hit = 0;
      for (VertexId v : h.edge(ei)) hit += s.contains(v) ? 1 : 0;
      if (hit >= p) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::size_t gamma_p_undirected(const Hypergraph& h, unsigned p) {
  check_p(h, p);
  std::size_t n = h.num_vertices();
  if (n > 30) throw CapExceeded(std::to_string(n), 30);  // subset search only
  for (std::size_t k = 0; k <= n; ++k) {
    bool found = false;
    for_each_combination(n, static_cast<unsigned>(k), [&](const std::vector<VertexId>& c) {
      if (found) return false;
      if (is_p_dominating_undirected(h, VertexSet(n, c), p)) found = true;
      return !found;
    });
    if (found) return k;
  }
  return n;  // S = V always dominates
}

}  // namespace hdom
