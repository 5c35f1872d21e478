#include "matchlab/combinat.hpp"

#include <array>
#include <stdexcept>

namespace matchlab {

BigInt binom(long long n, long long r) {
  if (n < 0) throw std::invalid_argument("binom: negative n");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (long long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;  // exact: result is C(n-r+i, i) after this step
  }
  return result;
}

std::uint64_t binom_u64(int n, int r) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxVertices + 1>,
               kMaxVertices + 1>
        t{};
    for (int i = 0; i <= kMaxVertices; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) {
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
      }
    }
    return t;
  }();
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("binom_u64: n out of [0, 64]");
  }
  if (r < 0 || r > n) return 0;
  return table[n][r];
}

std::uint64_t rank_colex(VertexSet s, int k) {
  if (s.size() != k) {
    throw std::invalid_argument("rank_colex: set size does not match k");
  }
  std::uint64_t rank = 0;
  int position = 1;
  std::uint64_t bits = s.bits;
  while (bits != 0) {
    const int v = std::countr_zero(bits);
    rank += binom_u64(v, position++);
    bits &= bits - 1;
  }
  return rank;
}

VertexSet unrank_colex(std::uint64_t rank, int k, int n) {
  if (k < 0 || k > n || n > kMaxVertices) {
    throw std::invalid_argument("unrank_colex: bad k or n");
  }
  if (rank >= binom_u64(n, k)) {
    throw std::out_of_range("unrank_colex: rank out of range");
  }
  VertexSet result;
  int v = n - 1;
  for (int position = k; position >= 1; --position) {
    while (binom_u64(v, position) > rank) --v;
    result = result.with(v);
    rank -= binom_u64(v, position);
  }
  return result;
}

BigInt parity_sum(int a, int b, int r, Parity parity) {
  if (a < 0 || b < 0 || r < 0) {
    throw std::invalid_argument("parity_sum: negative argument");
  }
  BigInt total = 0;
  for (int i = (parity == Parity::even ? 0 : 1); i <= r; i += 2) {
    total += binom(a, r - i) * binom(b, i);
  }
  return total;
}

Rational evensum_asymptote(const Rational& c, int r, long long n,
                           Parity parity) {
  if (c < 0 || c > 1) {
    throw std::invalid_argument("evensum_asymptote: c outside [0, 1]");
  }
  if (r < 1) throw std::invalid_argument("evensum_asymptote: r < 1");
  if (n < 0) throw std::invalid_argument("evensum_asymptote: negative n");
  const Rational correction = rat_pow(2 * c - 1, r);
  const Rational lead(int_pow(BigInt(n), r), 2 * factorial(r));
  return parity == Parity::even ? Rational(lead * (1 + correction))
                                : Rational(lead * (1 - correction));
}

}  // namespace matchlab
