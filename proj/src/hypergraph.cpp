#include "hdom/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hdom/combinatorics.hpp"
#include "hdom/prng.hpp"

namespace hdom {

Hypergraph::Hypergraph(std::size_t n, unsigned r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (r_ < 2) throw std::invalid_argument("uniformity r must be >= 2");
  for (Edge& e : edges_) {
    if (e.size() != r_) throw std::invalid_argument("edge has wrong size");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge has repeated vertices");
    if (e.back() >= n_) throw std::invalid_argument("edge vertex out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  incidence_.resize(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (VertexId v : edges_[i]) incidence_[v].push_back(static_cast<std::uint32_t>(i));
}

Hypergraph Hypergraph::complete(std::size_t n, unsigned r) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  std::vector<Edge> edges;
  if (n >= r) {
    auto count = binomial(n, r);
    if (!count || *count > kMaxGeneratedEdges)
      throw std::invalid_argument("complete hypergraph too large");
    edges.reserve(*count);
    for_each_combination(n, r, [&](const std::vector<VertexId>& c) { edges.push_back(c); });
  }
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph Hypergraph::random(std::size_t n, unsigned r, std::uint64_t m, std::uint64_t seed) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  auto total = binomial(n, r);
  if (total && m > *total)
    throw std::invalid_argument("requested more edges than the complete hypergraph has");
  Prng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (total) {
    // Floyd's sampling of m distinct ranks in [0, C(n,r)).
    std::set<std::uint64_t> ranks;
    for (std::uint64_t i = *total - m; i < *total; ++i) {
      std::uint64_t x = rng.below(i + 1);
      ranks.insert(ranks.count(x) ? i : x);
    }
    for (std::uint64_t rank : ranks) edges.push_back(unrank_combination(n, r, rank));
  } else {
    // C(n,r) does not fit in 64 bits; rejection sampling cannot stall.
    std::set<Edge> chosen;
    while (chosen.size() < m) {
      Edge e;
      VertexSet used(n);
      while (e.size() < r) {
        auto v = static_cast<VertexId>(rng.below(n));
        if (!used.contains(v)) {
          used.insert(v);
          e.push_back(v);
        }
      }
      std::sort(e.begin(), e.end());
      chosen.insert(std::move(e));
    }
    edges.assign(chosen.begin(), chosen.end());
  }
  return Hypergraph(n, r, std::move(edges));
}

std::size_t Hypergraph::degree(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  return incidence_[v].size();
}

const std::vector<std::uint32_t>& Hypergraph::incident_edges(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  return incidence_[v];
}

bool Hypergraph::has_edge(const Edge& sorted) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted);
}

Hypergraph Hypergraph::complement() const {
  std::vector<Edge> edges;
  if (n_ >= r_) {
    auto count = binomial(n_, r_);
    if (!count || *count > kMaxGeneratedEdges)
      throw std::invalid_argument("complement too large");
    edges.reserve(*count - edges_.size());
    std::size_t next = 0;  // edges_ is lex-sorted, walk both lists in lockstep
    for_each_combination(n_, r_, [&](const std::vector<VertexId>& c) {
      if (next < edges_.size() && edges_[next] == c)
        ++next;
      else
        edges.push_back(c);
    });
  }
  return Hypergraph(n_, r_, std::move(edges));
}

InducedSubhypergraph Hypergraph::induced(const VertexSet& keep) const {
  if (keep.universe() != n_)
    throw std::invalid_argument("vertex set universe does not match hypergraph");
  InducedSubhypergraph out;
  out.to_original = keep.members();
  out.to_induced.assign(n_, -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    out.to_induced[out.to_original[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    bool inside = true;
    for (VertexId v : e) inside = inside && keep.contains(v);
    if (!inside) continue;
    Edge mapped;
    mapped.reserve(r_);
    for (VertexId v : e) mapped.push_back(static_cast<VertexId>(out.to_induced[v]));
    edges.push_back(std::move(mapped));
  }
  out.graph = std::make_shared<Hypergraph>(out.to_original.size(), r_, std::move(edges));
  return out;
}

}  // namespace hdom
