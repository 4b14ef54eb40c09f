#include "hdom/orientation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hdom/combinatorics.hpp"
#include "hdom/prng.hpp"

namespace hdom {

Orientation::Orientation(std::shared_ptr<const Hypergraph> h, std::vector<Edge> orders)
    : h_(std::move(h)), orders_(std::move(orders)) {
  if (!h_) throw std::invalid_argument("null hypergraph");
  if (orders_.size() != h_->num_edges())
    throw std::invalid_argument("orientation must order every edge exactly once");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    Edge sorted = orders_[i];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != h_->edge(i))
      throw std::invalid_argument("order of edge " + std::to_string(i) +
                                  " is not a permutation of that edge");
  }
}

Orientation Orientation::random(std::shared_ptr<const Hypergraph> h, std::uint64_t seed) {
  if (!h) throw std::invalid_argument("null hypergraph");
  Prng rng(seed);
  std::vector<Edge> orders(h->edges().begin(), h->edges().end());
  for (Edge& e : orders) rng.shuffle(e);
  return Orientation(std::move(h), std::move(orders));
}

unsigned Orientation::position_of(std::size_t edge_index, VertexId v) const {
  const Edge& e = orders_[edge_index];
  for (unsigned i = 0; i < e.size(); ++i)
    if (e[i] == v) return i;
  throw std::invalid_argument("vertex not on edge");
}

void Orientation::check_prefix_size(std::size_t k) const {
  if (k < 1 || k > h_->uniformity() - 1)
    throw std::invalid_argument("prefix size must be in [1, r-1]");
}

std::vector<std::uint32_t> Orientation::directed_edge_set(const VertexSet& a) const {
  check_prefix_size(a.size());
  if (a.universe() != h_->num_vertices())
    throw std::invalid_argument("vertex set universe does not match hypergraph");
  std::size_t k = a.size();
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const Edge& ord = orders_[i];
    bool match = true;
    for (std::size_t j = 0; j < k && match; ++j) match = a.contains(ord[j]);
    if (match) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

VertexSet Orientation::directed_neighborhood(const VertexSet& a) const {
  VertexSet out(h_->num_vertices());
  std::size_t k = a.size();
  for (std::uint32_t i : directed_edge_set(a)) {
    const Edge& ord = orders_[i];
    for (std::size_t j = k; j < ord.size(); ++j) out.insert(ord[j]);
  }
  return out;
}

std::size_t Orientation::directed_degree(const VertexSet& a) const {
  return directed_edge_set(a).size();
}

std::size_t Orientation::n_arrow(const VertexSet& a) const {
  return directed_neighborhood(a).size();
}

std::pair<VertexSet, std::size_t> Orientation::max_directed_degree(
    unsigned p, std::size_t enumerate_threshold) const {
  check_prefix_size(p);
  std::size_t n = h_->num_vertices();
  if (n < p) throw std::invalid_argument("fewer vertices than prefix size");

  if (n <= enumerate_threshold) {
    // Exhaustive scan over all C(n, p) candidate sets, lexicographic order,
    // so the first maximum seen is the lex-smallest argmax.
    VertexSet best(n);
    std::size_t best_deg = 0;
    bool have = false;
    for_each_combination(n, p, [&](const std::vector<VertexId>& c) {
      std::size_t deg = 0;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        const Edge& ord = orders_[i];
        bool match = true;
        for (unsigned j = 0; j < p && match; ++j)
          match = std::find(c.begin(), c.end(), ord[j]) != c.end();
        if (match) ++deg;
      }
      if (!have || deg > best_deg) {
        have = true;
        best_deg = deg;
        best = VertexSet(n, c);
      }
    });
    return {best, best_deg};
  }

  // Only sets realized as a prefix of some edge can have positive degree.
  std::map<std::vector<VertexId>, std::size_t> counts;
  for (const Edge& ord : orders_) {
    std::vector<VertexId> key(ord.begin(), ord.begin() + p);
    std::sort(key.begin(), key.end());
    ++counts[key];
  }
  VertexSet best(n);
  std::size_t best_deg = 0;
  bool have = false;
  for (const auto& [key, deg] : counts) {
    // map iterates keys in sorted-vector order, which is lexicographic
    if (!have || deg > best_deg) {
      have = true;
      best_deg = deg;
      best = VertexSet(n, key);
    }
  }
  if (!have) {
    // Edgeless: lexicographically smallest p-set, degree 0.
    for (VertexId v = 0; v < p; ++v) best.insert(v);
  }
  return {best, best_deg};
}

Orientation Orientation::with_order(std::size_t edge_index, Edge new_order) const {
  std::vector<Edge> orders = orders_;
  orders.at(edge_index) = std::move(new_order);
  return Orientation(h_, std::move(orders));
}

}  // namespace hdom
