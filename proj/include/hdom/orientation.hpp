#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hdom/hypergraph.hpp"
#include "hdom/vertex_set.hpp"

namespace hdom {

// An orientation gives every edge one of the r! linear orders of its
// vertices. Immutable; search code builds mutated copies via with_order().
class Orientation {
 public:
  Orientation(std::shared_ptr<const Hypergraph> h, std::vector<Edge> orders);

  static Orientation random(std::shared_ptr<const Hypergraph> h, std::uint64_t seed);

  const Hypergraph& hypergraph() const { return *h_; }
  std::shared_ptr<const Hypergraph> hypergraph_ptr() const { return h_; }
  const std::vector<Edge>& orders() const { return orders_; }
  const Edge& order(std::size_t edge_index) const { return orders_[edge_index]; }

  // 0-based position of v in edge `edge_index`'s linear order.
  unsigned position_of(std::size_t edge_index, VertexId v) const;

  // Edges whose first |A| positions equal A as a set. Requires 1 <= |A| <= r-1.
  std::vector<std::uint32_t> directed_edge_set(const VertexSet& a) const;
  VertexSet directed_neighborhood(const VertexSet& a) const;
  std::size_t directed_degree(const VertexSet& a) const;
  std::size_t n_arrow(const VertexSet& a) const;

  // Argmax p-set and the max directed degree. Ties go to the
  // lexicographically smallest set. Candidate sets are enumerated
  // exhaustively when n <= enumerate_threshold; above that only sets that
  // occur as edge prefixes are scanned (all other sets have degree zero).
  std::pair<VertexSet, std::size_t> max_directed_degree(
      unsigned p, std::size_t enumerate_threshold = 24) const;

  Orientation with_order(std::size_t edge_index, Edge new_order) const;

  bool operator==(const Orientation& o) const {
    return *h_ == *o.h_ && orders_ == o.orders_;
  }

 private:
  void check_prefix_size(std::size_t k) const;

  std::shared_ptr<const Hypergraph> h_;
  std::vector<Edge> orders_;
};

}  // namespace hdom
