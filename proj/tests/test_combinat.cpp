#include <doctest.h>

#include <algorithm>
#include <vector>

#include "matchlab/combinat.hpp"

using namespace matchlab;

namespace {

// Independent Pascal-triangle oracle for binomials.
std::vector<std::vector<BigInt>> pascal_table(int n_max) {
  std::vector<std::vector<BigInt>> t(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    t[n].assign(n + 1, 1);
    for (int r = 1; r < n; ++r) t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
  }
  return t;
}

// Independent colex comparator: compare largest differing element.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

TEST_CASE("binomials match the Pascal recurrence") {
  const auto oracle = pascal_table(49);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(49, 6) == oracle[49][6]);
  CHECK(binom(49, 6) == BigInt(13983816));
  for (int n = 0; n <= 40; ++n) {
    for (int r = 0; r <= n; ++r) {
      REQUIRE(binom(n, r) == oracle[n][r]);
    }
  }
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK(binom_u64(49, 6) == 13983816u);
}

TEST_CASE("colex rank agrees with sorting all subsets") {
  CHECK(rank_colex(VertexSet::of({0, 1, 2}), 3) == 0);
  for (int n = 4; n <= 10; ++n) {
    for (int k = 2; k <= 4 && k <= n; ++k) {
      // last subset in colex order is {n-k, ..., n-1}
      VertexSet last;
      for (int v = n - k; v < n; ++v) last = last.with(v);
      CHECK(rank_colex(last, k) == binom_u64(n, k) - 1);

      std::vector<std::vector<int>> subsets;
      for_each_subset(n, k, [&](VertexSet s, std::uint64_t) {
        subsets.push_back(s.vertices());
      });
      auto sorted = subsets;
      std::sort(sorted.begin(), sorted.end(), colex_less);
      REQUIRE(sorted == subsets);  // enumeration order is colex order
      for (std::uint64_t r = 0; r < subsets.size(); ++r) {
        VertexSet s;
        for (int v : subsets[r]) s = s.with(v);
        REQUIRE(rank_colex(s, k) == r);
        REQUIRE(unrank_colex(r, k, n) == s);
      }
    }
  }
}

TEST_CASE("rank and unrank reject bad input") {
  CHECK_THROWS_AS(rank_colex(VertexSet::of({0, 1}), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(unrank_colex(binom_u64(6, 3), 3, 6), std::out_of_range);
}

TEST_CASE("parity sums expand term by term and close under Vandermonde") {
  const auto oracle = pascal_table(48);
  const auto direct = [&](int a, int b, int r, int parity) {
    BigInt total = 0;
    for (int i = 0; i <= r; ++i) {
      if ((i & 1) != parity) continue;
      const BigInt left = (r - i <= a) ? oracle[a][r - i] : BigInt(0);
      const BigInt right = (i <= b) ? oracle[b][i] : BigInt(0);
      total += left * right;
    }
    return total;
  };

  CHECK(parity_sum(2, 2, 2, Parity::even) == 2);
  CHECK(parity_sum(2, 2, 2, Parity::odd) == 4);
  CHECK(parity_sum(2, 2, 2, Parity::even) + parity_sum(2, 2, 2, Parity::odd)
        == binom(4, 2));

  for (int a = 0; a <= 24; ++a) {
    for (int b = 0; b <= 24; ++b) {
      for (int r = 0; r <= 10; ++r) {
        REQUIRE(parity_sum(a, b, r, Parity::even) == direct(a, b, r, 0));
        REQUIRE(parity_sum(a, b, r, Parity::odd) == direct(a, b, r, 1));
        REQUIRE(parity_sum(a, b, r, Parity::even) +
                    parity_sum(a, b, r, Parity::odd) ==
                binom(a + b, r));
      }
    }
  }
}

TEST_CASE("parity sums at r = 0 and b = 0 collapse to single terms") {
  for (int a : {0, 3, 11}) {
    for (int b : {0, 4, 9}) {
      CHECK(parity_sum(a, b, 0, Parity::even) == 1);
      CHECK(parity_sum(a, b, 0, Parity::odd) == 0);
    }
    for (int r : {0, 1, 2, 3}) {
      // b = 0 forces i = 0: only the even class ever collects a term
      CHECK(parity_sum(a, 0, r, Parity::even) == binom(a, r));
      CHECK(parity_sum(a, 0, r, Parity::odd) == 0);
      // a = 0 forces i = r: the term lands in the class of r's parity
      CHECK(parity_sum(0, a, r, parity_of(r)) == binom(a, r));
      CHECK(parity_sum(0, a, r, parity_of(r + 1)) == 0);
    }
  }
}

TEST_CASE("leading-term values substitute exactly") {
  CHECK(evensum_asymptote(Rational(1, 2), 3, 6, Parity::even) ==
        Rational(18));
  CHECK(evensum_asymptote(Rational(1), 2, 4, Parity::even) == Rational(8));
  CHECK(evensum_asymptote(Rational(0), 3, 10, Parity::odd) ==
        Rational(500, 3));
  CHECK_THROWS_AS(evensum_asymptote(Rational(3, 2), 2, 4, Parity::even),
                  std::invalid_argument);
  CHECK_THROWS_AS(evensum_asymptote(Rational(1, 2), 0, 4, Parity::even),
                  std::invalid_argument);
}

TEST_CASE("parity sums track the leading term to order n^(r-1)") {
  // |exact - leading| / n^(r-1) stays below 1 on a spot grid; the acceptance
  // suite runs the full grid.
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{
           {0, 1}, {1, 2}, {1, 1}}) {
    const Rational c(p, q);
    for (int r = 1; r <= 4; ++r) {
      for (long long n = 50; n <= 300; n += 50) {
        const int a = static_cast<int>((n * p) / q);
        for (Parity parity : {Parity::even, Parity::odd}) {
          Rational diff = Rational(parity_sum(a, static_cast<int>(n) - a, r,
                                              parity)) -
                          evensum_asymptote(c, r, n, parity);
          if (diff < 0) diff = -diff;
          REQUIRE(diff <= Rational(int_pow(BigInt(n), r - 1)));
        }
      }
    }
  }
}
