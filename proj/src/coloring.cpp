#include "hdom/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "hdom/combinatorics.hpp"
#include "hdom/vertex_set.hpp"

namespace hdom {

bool is_proper(const Hypergraph& h, const Coloring& c) {
  if (c.assignment.size() != h.num_vertices())
    throw std::invalid_argument("coloring length does not match vertex count");
  for (const Edge& e : h.edges()) {
    bool mono = true;
    for (std::size_t j = 1; j < e.size() && mono; ++j)
      mono = c.assignment[e[j]] == c.assignment[e[0]];
    if (mono) return false;
  }
  return true;
}

namespace {

struct ChiSearch {
  const Hypergraph& h;
  std::size_t n;
  unsigned k;
  std::vector<std::uint32_t> color;
  std::vector<std::vector<std::uint32_t>> edges_by_last;  // edge ids by their max vertex

  bool feasible(std::size_t v, unsigned used) {
    if (v == n) return true;
    unsigned limit = std::min<unsigned>(k, used + 1);  // first use of a color: smallest id
    for (unsigned c = 0; c < limit; ++c) {
      color[v] = c;
      bool ok = true;
      for (std::uint32_t ei : edges_by_last[v]) {
        const Edge& e = h.edge(ei);
        bool mono = true;
        for (std::size_t j = 1; j < e.size() && mono; ++j)
          mono = color[e[j]] == color[e[0]];
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok && feasible(v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }
};

}  // namespace

std::size_t chromatic_number_exact(const Hypergraph& h, std::size_t cap) {
  std::size_t n = h.num_vertices();
  if (n > cap) throw CapExceeded(std::to_string(n), cap);
  if (n == 0) return 0;
  ChiSearch s{h, n, 0, std::vector<std::uint32_t>(n, 0), {}};
  s.edges_by_last.resize(n);
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    s.edges_by_last[h.edge(i).back()].push_back(static_cast<std::uint32_t>(i));
  for (unsigned k = 1; k <= n; ++k) {
    s.k = k;
    if (s.feasible(0, 0)) return k;
  }
  return n;
}

namespace {

// Can v join the class and keep it a clique (or small)? The class is
// maintained clique-or-small, so only r-subsets through v need checking.
bool class_accepts(const Hypergraph& h, const std::vector<VertexId>& cls, VertexId v) {
  unsigned r = h.uniformity();
  if (cls.size() + 1 <= static_cast<std::size_t>(r) - 1) return true;
  bool ok = true;
  for_each_combination(cls.size(), r - 1, [&](const std::vector<VertexId>& pick) {
    Edge e;
    e.reserve(r);
    for (VertexId i : pick) e.push_back(cls[i]);
    e.push_back(v);
    std::sort(e.begin(), e.end());
    if (!h.has_edge(e)) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace

Coloring greedy_complement_coloring(const Hypergraph& h) {
  std::size_t n = h.num_vertices();
  std::vector<std::vector<VertexId>> classes;
  Coloring c;
  c.assignment.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    bool placed = false;
    for (std::size_t i = 0; i < classes.size() && !placed; ++i) {
      if (class_accepts(h, classes[i], v)) {
        classes[i].push_back(v);
        c.assignment[v] = static_cast<std::uint32_t>(i);
        placed = true;
      }
    }
    if (!placed) {
      c.assignment[v] = static_cast<std::uint32_t>(classes.size());
      classes.push_back({v});
    }
  }
  c.num_colors = static_cast<std::uint32_t>(classes.size());
  return c;
}

namespace {

struct AlphaSearch {
  const Hypergraph& h;
  std::size_t n;
  std::size_t best = 0;
  VertexSet cur;

  void rec(VertexId v, std::size_t size) {
    if (size + (n - v) <= best) return;
    if (v == n) {
      best = std::max(best, size);
      return;
    }
    // taking v is legal unless it completes an edge inside cur
    bool ok = true;
    for (std::uint32_t ei : h.incident_edges(v)) {
      bool inside = true;
      for (VertexId u : h.edge(ei)) inside = inside && (u == v || cur.contains(u));
      if (inside && h.edge(ei).back() == v) {  // only fully decided edges matter
        ok = false;
        break;
      }
    }
    if (ok) {
      cur.insert(v);
      rec(v + 1, size + 1);
      cur.erase(v);
    }
    rec(v + 1, size);
  }
};

struct OmegaSearch {
  const Hypergraph& h;
  std::size_t n;
  unsigned r;
  std::size_t best = 0;
  std::vector<VertexId> cur;

  void rec(VertexId v, std::size_t size) {
    if (size + (n - v) <= best) return;
    if (v == n) {
      best = std::max(best, size);
      return;
    }
    bool ok = true;
    if (size + 1 >= r) {
      for_each_combination(size, r - 1, [&](const std::vector<VertexId>& pick) {
        Edge e;
        e.reserve(r);
        for (VertexId i : pick) e.push_back(cur[i]);
        e.push_back(v);
        std::sort(e.begin(), e.end());
        if (!h.has_edge(e)) ok = false;
        return ok;
      });
    }
    if (ok) {
      cur.push_back(v);
      rec(v + 1, size + 1);
      cur.pop_back();
    }
    rec(v + 1, size);
  }
};

}  // namespace

std::size_t independence_number(const Hypergraph& h, std::size_t cap) {
  std::size_t n = h.num_vertices();
  if (n > cap) throw CapExceeded(std::to_string(n), cap);
  AlphaSearch s{h, n, 0, VertexSet(n)};
  s.rec(0, 0);
  return s.best;
}

std::size_t clique_number(const Hypergraph& h, std::size_t cap) {
  std::size_t n = h.num_vertices();
  if (n > cap) throw CapExceeded(std::to_string(n), cap);
  OmegaSearch s{h, n, h.uniformity(), 0, {}};
  s.rec(0, 0);
  return s.best;
}

}  // namespace hdom
