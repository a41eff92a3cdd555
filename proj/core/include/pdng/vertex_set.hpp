#pragma once

#include <bit>
#include <cstdint>
#include <iterator>

namespace pdng {

using Mask = std::uint64_t;

/// Largest supported order: a VertexSet is one machine word with two spare bits.
inline constexpr int kMaxOrder = 62;

/// Mask with the low `n` bits set.
constexpr Mask full_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Set of vertices of a graph of order at most kMaxOrder, stored as a bitmask.
class VertexSet {
public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(Mask bits) noexcept : bits_(bits) {}

  static constexpr VertexSet single(int v) noexcept { return VertexSet{Mask{1} << v}; }
  static constexpr VertexSet all(int n) noexcept { return VertexSet{full_mask(n)}; }

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const noexcept { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const noexcept { return VertexSet{bits_ | (Mask{1} << v)}; }
  constexpr VertexSet without(int v) const noexcept { return VertexSet{bits_ & ~(Mask{1} << v)}; }

  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const noexcept = default;

  class iterator {
  public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(Mask rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { auto tmp = *this; ++*this; return tmp; }
    constexpr bool operator==(const iterator&) const noexcept = default;

  private:
    Mask rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator{bits_}; }
  constexpr iterator end() const noexcept { return iterator{0}; }

private:
  Mask bits_ = 0;
};

} // end of namespace pdng
