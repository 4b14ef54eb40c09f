#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hdom/common.hpp"
#include "hdom/vertex_set.hpp"

namespace hdom {

class Hypergraph;

// Result of taking an induced subhypergraph: the vertex ids are relabeled to
// a dense 0-based range, preserving the original order, and both direction
// maps are kept so callers can translate results back.
struct InducedSubhypergraph {
  std::shared_ptr<const Hypergraph> graph;
  std::vector<VertexId> to_original;      // new id -> original id
  std::vector<std::int64_t> to_induced;   // original id -> new id, -1 if dropped
};

// Immutable r-uniform hypergraph. Edges are canonical (sorted ascending) and
// the edge list is sorted lexicographically; an edge's identity is its index
// into this list, which orientations and certificates reference.
class Hypergraph {
 public:
  Hypergraph(std::size_t n, unsigned r, std::vector<Edge> edges);

  static Hypergraph complete(std::size_t n, unsigned r);
  static Hypergraph random(std::size_t n, unsigned r, std::uint64_t m, std::uint64_t seed);

  std::size_t num_vertices() const { return n_; }
  unsigned uniformity() const { return r_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::size_t degree(VertexId v) const;
  const std::vector<std::uint32_t>& incident_edges(VertexId v) const;

  // `sorted` must be in canonical form.
  bool has_edge(const Edge& sorted) const;

  Hypergraph complement() const;
  InducedSubhypergraph induced(const VertexSet& keep) const;

  bool operator==(const Hypergraph& o) const {
    return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_;
  }

  // Edge-count guard for the combinatorial constructors (complete/complement).
  static constexpr std::uint64_t kMaxGeneratedEdges = 50'000'000;

 private:
  std::size_t n_;
  unsigned r_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

}  // namespace hdom
