#include <doctest.h>

#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"

using namespace matchlab;

TEST_CASE("small barriers have the expected shape") {
  // even intersections on a 3+3 split: two disjoint triangles
  const Hypergraph even = build_barrier({6, 2, 3, BarrierVariant::even_intersection});
  CHECK(even.edge_count() == 6);
  CHECK(even.contains(VertexSet::of({0, 1})));
  CHECK(even.contains(VertexSet::of({3, 4})));
  CHECK_FALSE(even.contains(VertexSet::of({0, 3})));

  // odd intersections: the complete bipartite graph between the classes
  const Hypergraph odd = build_barrier({6, 2, 3, BarrierVariant::odd_intersection});
  CHECK(odd.edge_count() == 9);
  CHECK(odd.contains(VertexSet::of({0, 3})));
  CHECK_FALSE(odd.contains(VertexSet::of({0, 1})));
}

TEST_CASE("the two variants are complements for every split size") {
  for (int n = 4; n <= 10; ++n) {
    for (int k = 2; k <= 3 && k <= n; ++k) {
      for (int a = 0; a <= n; ++a) {
        CHECK(build_barrier({n, k, a, BarrierVariant::odd_intersection}) ==
              complement(build_barrier(
                  {n, k, a, BarrierVariant::even_intersection})));
      }
    }
  }
}

TEST_CASE("family membership follows the parity clauses") {
  const auto members_63 = ext_family(6, 3);  // n/k even
  REQUIRE(members_63.size() == 6);
  for (int i = 0; i < 3; ++i) {
    CHECK(members_63[i].spec.variant == BarrierVariant::even_intersection);
    CHECK(members_63[i].spec.a == 2 * i + 1);
    CHECK(members_63[i + 3].spec.variant == BarrierVariant::odd_intersection);
    CHECK(members_63[i + 3].spec.a == 2 * i + 1);
  }

  const auto members_93 = ext_family(9, 3);  // n/k odd
  REQUIRE(members_93.size() == 10);
  for (int i = 0; i < 5; ++i) {
    CHECK(members_93[i].spec.variant == BarrierVariant::even_intersection);
    CHECK(members_93[i].spec.a == 2 * i + 1);
    CHECK(members_93[i + 5].spec.variant == BarrierVariant::odd_intersection);
    CHECK(members_93[i + 5].spec.a == 2 * i);
  }

  CHECK_THROWS_AS(ext_family(7, 3), std::invalid_argument);
}

TEST_CASE("every family member is matching-free at small sizes") {
  for (int n : {6, 9}) {
    for (const ExtFamilyMember& member : ext_family(n, 3)) {
      CHECK_FALSE(has_perfect_matching(build_barrier(member.spec)).exists);
    }
  }
  for (int n : {6, 8}) {
    for (const ExtFamilyMember& member : ext_family(n, 2)) {
      CHECK_FALSE(has_perfect_matching(build_barrier(member.spec)).exists);
    }
  }
}

TEST_CASE("closed-form barrier degrees match hand expansion") {
  CHECK(barrier_min_degree_closed_form(
            {6, 3, 3, BarrierVariant::even_intersection}, 1) == 4);
  CHECK(barrier_min_degree_closed_form(
            {6, 3, 1, BarrierVariant::even_intersection}, 1) == 0);
  CHECK_THROWS_AS(barrier_min_degree_closed_form(
                      {6, 3, 3, BarrierVariant::even_intersection}, 3),
                  std::invalid_argument);
}

TEST_CASE("closed-form barrier degrees match enumeration") {
  for (int k = 2; k <= 3; ++k) {
    for (int n = k; n <= 10; ++n) {
      for (int a = 0; a <= n; ++a) {
        for (BarrierVariant variant : {BarrierVariant::odd_intersection,
                                       BarrierVariant::even_intersection}) {
          const BarrierSpec spec{n, k, a, variant};
          const Hypergraph h = build_barrier(spec);
          for (int ell = 1; ell < k; ++ell) {
            REQUIRE(barrier_min_degree_closed_form(spec, ell) ==
                    min_ell_degree(h, ell).degree);
          }
        }
      }
    }
  }
}

TEST_CASE("family thresholds at the worked sizes") {
  const DeltaThreshold d621 = delta_threshold(6, 2, 1);
  CHECK(d621.value == 2);
  CHECK(d621.argmax.spec.a == 3);
  CHECK(d621.argmax.spec.variant == BarrierVariant::even_intersection);

  CHECK(delta_threshold(6, 3, 1).value == 4);
  CHECK(delta_threshold(6, 3, 2).value == 1);
}

TEST_CASE("space barrier construction and degree formula") {
  const Hypergraph star = space_barrier(6, 3);
  CHECK(star.edge_count() == binom_u64(6, 3) - binom_u64(5, 3));
  CHECK(space_barrier_degree(6, 3, 1) == 4);
  for (int k : {2, 3}) {
    for (int n = 2 * k; n <= 12; n += k) {
      CHECK_FALSE(has_perfect_matching(space_barrier(n, k)).exists);
      for (int ell = 1; ell < k; ++ell) {
        CHECK(space_barrier_degree(n, k, ell) ==
              min_ell_degree(space_barrier(n, k), ell).degree);
      }
    }
  }
  CHECK_THROWS_AS(space_barrier(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(space_barrier(3, 3), std::invalid_argument);
}

TEST_CASE("conjectured thresholds combine the two terms") {
  CHECK(conjectured_threshold(6, 2, 1) == 3);
  CHECK(conjectured_threshold(6, 3, 1) == 5);
}

TEST_CASE("family threshold approaches half the full degree") {
  // deviation |delta / C(n-1,2) - 1/2| stays within 1/10, drops strictly
  // below the n = 6 value immediately, and ends tiny. The deviation is not
  // monotone step by step (floor oscillation), so only the envelope is
  // asserted.
  const Rational bound(1, 10);
  Rational first;
  Rational last;
  for (int n = 6; n <= 60; n += 3) {
    const Rational ratio(delta_threshold(n, 3, 1).value, binom(n - 1, 2));
    Rational deviation = ratio - Rational(1, 2);
    if (deviation < 0) deviation = -deviation;
    REQUIRE(deviation <= bound);
    if (n == 6) {
      first = deviation;
      CHECK(first == bound);
    } else {
      REQUIRE(deviation < first);
    }
    last = deviation;
  }
  CHECK(last < Rational(1, 500));
}
