#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace matchlab {

// Subsets of {0, ..., n-1} as 64-bit masks. Everything in the lab lives on
// at most 64 labeled vertices.
inline constexpr int kMaxVertices = 64;

struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  explicit constexpr VertexSet(std::uint64_t mask) : bits(mask) {}

  static VertexSet of(std::initializer_list<int> vertices);

  // {0, ..., count-1}
  static constexpr VertexSet prefix(int count) {
    return VertexSet(count >= 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << count) - 1);
  }
  static constexpr VertexSet full(int n) { return prefix(n); }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int v) const { return (bits >> v) & 1u; }
  constexpr bool contains_all(VertexSet s) const {
    return (bits & s.bits) == s.bits;
  }
  constexpr bool intersects(VertexSet s) const { return (bits & s.bits) != 0; }

  constexpr VertexSet with(int v) const {
    return VertexSet(bits | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits & ~(std::uint64_t{1} << v));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits | b.bits);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits & b.bits);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits & ~b.bits);
  }

  // Ascending vertex labels.
  std::vector<int> vertices() const;

  bool operator==(const VertexSet&) const = default;
};

}  // namespace matchlab
