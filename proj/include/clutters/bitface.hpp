#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace clutters {

/// Maximum supported ground-set size; every face fits in one machine word.
inline constexpr int kMaxVertices = 32;

using Mask = std::uint32_t;

/// A subset of a ground set {0, ..., n-1}, stored as a bit mask.
/// Vertex v is a member iff bit v is set.  Ordering is by mask value.
class BitFace {
 public:
  constexpr BitFace() = default;
  constexpr explicit BitFace(Mask bits) : bits_(bits) {}

  static constexpr BitFace single(int v) { return BitFace(Mask{1} << v); }

  static BitFace of(std::initializer_list<int> vs) {
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << v;
    return BitFace(m);
  }

  /// All of {0, ..., n-1}.
  static constexpr BitFace full(int n) {
    return BitFace(n == 0 ? 0 : (n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1));
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool subset_of(BitFace o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(BitFace o) const {
    return bits_ != o.bits_ && subset_of(o);
  }
  constexpr bool intersects(BitFace o) const { return (bits_ & o.bits_) != 0; }

  constexpr BitFace plus(int v) const { return BitFace(bits_ | (Mask{1} << v)); }
  constexpr BitFace minus(int v) const { return BitFace(bits_ & ~(Mask{1} << v)); }

  constexpr BitFace operator|(BitFace o) const { return BitFace(bits_ | o.bits_); }
  constexpr BitFace operator&(BitFace o) const { return BitFace(bits_ & o.bits_); }
  constexpr BitFace operator-(BitFace o) const { return BitFace(bits_ & ~o.bits_); }

  constexpr int lowest() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// Iterates the members in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    Mask rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr auto operator<=>(const BitFace&) const = default;

 private:
  Mask bits_ = 0;
};

/// Reindexes a face after vertex v leaves the ground set: members above v
/// shift down by one.  The face must not contain v.
constexpr BitFace drop_vertex_reindex(BitFace f, int v) {
  const Mask low = f.bits() & ((Mask{1} << v) - 1);
  const Mask high = v + 1 >= kMaxVertices ? 0 : f.bits() >> (v + 1);
  return BitFace(low | (high << v));
}

}  // namespace clutters
