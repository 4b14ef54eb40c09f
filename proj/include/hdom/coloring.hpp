#pragma once

#include <cstdint>
#include <vector>

#include "hdom/hypergraph.hpp"

namespace hdom {

// Vertex coloring; proper means no edge is monochromatic.
struct Coloring {
  std::vector<std::uint32_t> assignment;  // one color id per vertex
  std::uint32_t num_colors = 0;
};

bool is_proper(const Hypergraph& h, const Coloring& c);

// Exact chromatic number by incremental k-search with backtracking.
// Refuses when n exceeds `cap`.
std::size_t chromatic_number_exact(const Hypergraph& h, std::size_t cap = 16);

// Proper coloring of the complement of h: vertices in index order, each put
// into the first class that stays a clique of h (or keeps size < r); such
// classes contain no complement edge. Deterministic, no degree heuristics.
Coloring greedy_complement_coloring(const Hypergraph& h);

// Exact independence number (largest set containing no edge) and clique
// number (largest set all of whose r-subsets are edges) by pruned search.
std::size_t independence_number(const Hypergraph& h, std::size_t cap = 24);
std::size_t clique_number(const Hypergraph& h, std::size_t cap = 24);

}  // namespace hdom
