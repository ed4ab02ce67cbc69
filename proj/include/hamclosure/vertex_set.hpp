#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace hamclosure {

using Vertex = int;

/// Subset of a vertex range 0..universe-1 stored as a bit row.
///
/// Universes of at most 64 vertices live in a single inline word, so set
/// algebra on desk-scale graphs never touches the heap. Larger universes
/// fall back to a chunked word vector with identical semantics.
class VertexSet {
 public:
  static constexpr int kInlineBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}

    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe) {
    assert(universe >= 0);
    if (universe_ > kInlineBits) heap_.assign(word_count(), 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < s.word_count(); ++w) s.data()[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.set(v);
    return s;
  }

  template <typename Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.set(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool test(Vertex v) const {
    assert(v >= 0 && v < universe_);
    return (data()[v >> 6] >> (v & 63)) & 1U;
  }
  bool contains(Vertex v) const { return v >= 0 && v < universe_ && test(v); }

  void set(Vertex v) {
    assert(v >= 0 && v < universe_);
    data()[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(Vertex v) {
    assert(v >= 0 && v < universe_);
    data()[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() {
    for (int w = 0; w < word_count(); ++w) data()[w] = 0;
  }

  int count() const {
    int c = 0;
    for (int w = 0; w < word_count(); ++w) c += std::popcount(data()[w]);
    return c;
  }
  bool empty() const {
    for (int w = 0; w < word_count(); ++w)
      if (data()[w] != 0) return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Smallest member, or -1 when empty.
  Vertex first() const { return scan_from(0); }
  /// Smallest member greater than `after`, or -1.
  Vertex next(Vertex after) const { return scan_from(after + 1); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (int w = 0; w < word_count(); ++w) data()[w] &= o.data()[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (int w = 0; w < word_count(); ++w) data()[w] |= o.data()[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (int w = 0; w < word_count(); ++w) data()[w] &= ~o.data()[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet operator~() const {
    VertexSet s(universe_);
    for (int w = 0; w < word_count(); ++w) s.data()[w] = ~data()[w];
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (int w = 0; w < word_count(); ++w)
      if ((data()[w] & o.data()[w]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (int w = 0; w < word_count(); ++w)
      if ((data()[w] & ~o.data()[w]) != 0) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    if (universe_ != o.universe_) return false;
    for (int w = 0; w < word_count(); ++w)
      if (data()[w] != o.data()[w]) return false;
    return true;
  }

  /// Lexicographic order of the ascending member lists.
  friend std::strong_ordering lex_compare(const VertexSet& a, const VertexSet& b) {
    Vertex x = a.first();
    Vertex y = b.first();
    while (x != -1 && y != -1) {
      if (x != y) return x <=> y;
      x = a.next(x);
      y = b.next(y);
    }
    if (x == -1 && y == -1) return std::strong_ordering::equal;
    return x == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  std::span<const std::uint64_t> words() const {
    return {data(), static_cast<std::size_t>(word_count())};
  }

 private:
  int word_count() const { return universe_ <= kInlineBits ? 1 : (universe_ + 63) / 64; }
  std::uint64_t* data() { return universe_ <= kInlineBits ? &inline_ : heap_.data(); }
  const std::uint64_t* data() const { return universe_ <= kInlineBits ? &inline_ : heap_.data(); }

  void trim() {
    const int tail = universe_ & 63;
    if (universe_ == 0) {
      inline_ = 0;
    } else if (tail != 0) {
      data()[word_count() - 1] &= (std::uint64_t{1} << tail) - 1;
    }
  }

  Vertex scan_from(Vertex from) const {
    if (from >= universe_) return -1;
    int w = from >> 6;
    std::uint64_t word = data()[w] & (~std::uint64_t{0} << (from & 63));
    const int words = word_count();
    while (true) {
      if (word != 0) return (w << 6) + std::countr_zero(word);
      if (++w >= words) return -1;
      word = data()[w];
    }
  }

  int universe_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace hamclosure
