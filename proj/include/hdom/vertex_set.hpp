#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hdom/common.hpp"

namespace hdom {

// Subset of {0, ..., n-1} as a dynamic bitset. One 64-bit word covers every
// solver-sized instance; larger universes just grow the word vector.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  VertexSet(std::size_t n, std::initializer_list<VertexId> members) : VertexSet(n) {
    for (VertexId v : members) insert(v);
  }
  VertexSet(std::size_t n, const std::vector<VertexId>& members) : VertexSet(n) {
    for (VertexId v : members) insert(v);
  }

  std::size_t universe() const { return n_; }

  bool contains(VertexId v) const {
    return v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
  }

  void insert(VertexId v) {
    check_range(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(VertexId v) {
    check_range(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  VertexSet complement_in_universe() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Order of the sorted member lists. For two sets the first differing
  // element decides, which is the lowest bit where the words differ.
  bool lex_less(const VertexSet& o) const {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Smallest member, or n when empty.
  VertexId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<VertexId>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<VertexId>(n_);
  }

  // Raw word access for mask-based fast paths (universe <= 64).
  std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
  static VertexSet from_word(std::size_t n, std::uint64_t w) {
    VertexSet s(n);
    if (!s.words_.empty()) {
      s.words_[0] = w;
      s.trim();
    }
    return s;
  }

 private:
  void check_range(VertexId v) const {
    if (v >= n_) throw std::out_of_range("vertex id out of range");
  }
  void require_same_universe(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("vertex sets over different universes");
  }
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace hdom
