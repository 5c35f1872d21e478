#pragma once

#include <cstdint>

#include "matchlab/numeric.hpp"
#include "matchlab/vertex_set.hpp"

namespace matchlab {

// C(n, r) exactly; 0 whenever r < 0 or r > n.
BigInt binom(long long n, long long r);

// Table-backed C(n, r) for 0 <= n <= 64 (every such value fits in 64 bits).
// Used on ranking and enumeration hot paths.
std::uint64_t binom_u64(int n, int r);

// Colexicographic rank of a k-subset: with vertices v_1 < ... < v_k the rank
// is sum_i C(v_i, i). Ranks run over [0, C(n,k)) and ordering agrees with
// numeric order of the bit masks.
std::uint64_t rank_colex(VertexSet s, int k);

// Inverse of rank_colex on [0, C(n,k)).
VertexSet unrank_colex(std::uint64_t rank, int k, int n);

enum class Parity : int { even = 0, odd = 1 };

constexpr Parity parity_of(int value) {
  return (value & 1) ? Parity::odd : Parity::even;
}

// Sum over 0 <= i <= r with i of the given parity of C(a, r-i) * C(b, i).
// The two parity classes partition the Vandermonde sum C(a+b, r).
BigInt parity_sum(int a, int b, int r, Parity parity);

// n^r * (1 + (2c-1)^r) / (2 r!) for even parity; the odd-parity value flips
// the sign of the correction term. Leading term of the parity sums with
// a = cn, b = (1-c)n.
Rational evensum_asymptote(const Rational& c, int r, long long n,
                           Parity parity);

// Visits every k-subset of {0..n-1} in colex order as fn(set, rank).
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(VertexSet{}, std::uint64_t{0});
    return;
  }
  const std::uint64_t total = binom_u64(n, k);
  std::uint64_t mask = (k >= 64) ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << k) - 1;
  for (std::uint64_t rank = 0;; ++rank) {
    fn(VertexSet(mask), rank);
    if (rank + 1 == total) break;
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t carry = mask + low;
    mask = carry | (((mask ^ carry) / low) >> 2);
  }
}

}  // namespace matchlab
