#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace zf {

// Largest vertex count any Graph may have. Base graphs of functigraphs are
// limited to half of this.
inline constexpr int kMaxOrder = 128;

// Fixed-width bitset over vertex indices [0, kMaxOrder).
class VertexSet {
 public:
  static constexpr int kWords = kMaxOrder / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices);

  // {0, ..., n-1}
  static VertexSet range(int n);
  static VertexSet from_vector(const std::vector<int>& vertices);

  bool contains(int v) const {
    return (words_[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) { words_[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[static_cast<unsigned>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const;
  // Smallest member strictly greater than v, or -1.
  int next(int v) const;

  bool is_subset_of(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::vector<int> to_vector() const;
  // "{0,3,5}" with 0-based labels.
  std::string to_string() const;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

// Orders sets by their ascending member sequences (lexicographic), the order
// in which k-subset enumeration visits them.
bool lexicographically_less(const VertexSet& a, const VertexSet& b);

}  // namespace zf
