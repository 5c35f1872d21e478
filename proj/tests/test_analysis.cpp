#include <doctest.h>

#include <random>

#include "matchlab/analysis.hpp"
#include "matchlab/errors.hpp"
#include "matchlab/matching.hpp"

using namespace matchlab;

TEST_CASE("brute-force thresholds on the feasible grid") {
  const ThresholdReport pairs6 = brute_force_threshold(2, 1, 6);
  REQUIRE(pairs6.brute_force.has_value());
  CHECK(*pairs6.brute_force == 3);
  CHECK(*pairs6.brute_force == pairs6.delta + 1);

  const ThresholdReport triples1 = brute_force_threshold(3, 1, 6);
  REQUIRE(triples1.brute_force.has_value());
  CHECK(*triples1.brute_force == 6);
  CHECK(*triples1.brute_force >= delta_threshold(6, 3, 1).value + 1);

  const ThresholdReport triples2 = brute_force_threshold(3, 2, 6);
  REQUIRE(triples2.brute_force.has_value());
  CHECK(*triples2.brute_force == 3);
  CHECK(*triples2.brute_force >= delta_threshold(6, 3, 2).value + 1);

  // each witness is matching-free and attains minimum degree m - 1, and
  // both barrier constructions force lower bounds
  for (const ThresholdReport* report : {&pairs6, &triples1, &triples2}) {
    REQUIRE(report->witness.has_value());
    CHECK_FALSE(has_perfect_matching(*report->witness).exists);
    CHECK(min_ell_degree(*report->witness, report->ell).degree ==
          *report->brute_force - 1);
    CHECK(*report->brute_force >= report->delta + 1);
    CHECK(*report->brute_force >= report->space + 1);
  }
}

TEST_CASE("exhausted budgets surface the best bound found") {
  try {
    brute_force_threshold(3, 1, 6, 64);
    FAIL("expected a budget error");
  } catch (const BudgetExhaustedError& e) {
    CHECK(e.best_min_degree >= 0);
    CHECK(e.best_min_degree <= 5);
  }
}

TEST_CASE("off-grid brute-force requests are refused") {
  CHECK_THROWS_AS(brute_force_threshold(3, 1, 12), SizeCapError);
  CHECK_THROWS_AS(brute_force_threshold(3, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_threshold(3, 3, 6), std::invalid_argument);
}

TEST_CASE("closeness to barriers") {
  const Hypergraph b83 = build_barrier({8, 3, 4, BarrierVariant::odd_intersection});
  const ClosenessReport self = closeness(b83, BarrierVariant::odd_intersection);
  CHECK(self.distance == 0);
  CHECK(self.epsilon == 0);

  // toggling t edges moves the distance by at most t
  std::mt19937_64 rng(5);
  for (int t = 1; t <= 5; ++t) {
    Hypergraph perturbed = b83;
    for (int i = 0; i < t; ++i) {
      perturbed.toggle_rank(rng() % perturbed.rank_count());
    }
    const ClosenessReport report =
        closeness(perturbed, BarrierVariant::odd_intersection);
    CHECK(report.distance <= t);
    // the reported bipartition certifies the reported distance
    const ClosenessReport recheck = closeness_fixed(
        perturbed, BarrierVariant::odd_intersection, report.part_a);
    CHECK(recheck.distance == report.distance);
  }

  // with k odd the two variants coincide under swapping the classes, so the
  // even variant is also at distance zero; with k even they differ
  CHECK(closeness(b83, BarrierVariant::even_intersection).distance == 0);
  const Hypergraph two_triangles =
      build_barrier({6, 2, 3, BarrierVariant::even_intersection});
  CHECK(closeness(two_triangles, BarrierVariant::even_intersection).distance ==
        0);
  // nearest complete bipartite graph: a mixed split keeps 4 of the 6
  // triangle edges crossing, so the difference is 6 + 9 - 2*4 = 7
  CHECK(closeness(two_triangles, BarrierVariant::odd_intersection).distance ==
        7);

  // from the complete hypergraph the distance is the count of
  // odd-intersection k-sets, the same for every balanced split
  const ClosenessReport complete_report =
      closeness(Hypergraph::complete(6, 3), BarrierVariant::even_intersection);
  CHECK(complete_report.distance ==
        binom(3, 1) * binom(3, 2) + binom(3, 3));
  CHECK(complete_report.distance == 10);
}

TEST_CASE("closeness respects the enumeration cap") {
  CHECK_THROWS_AS(closeness(Hypergraph(24, 3), BarrierVariant::odd_intersection),
                  SizeCapError);
  // explicit bipartitions bypass the cap; the distance from the empty
  // hypergraph is the number of odd-intersection 3-sets
  const ClosenessReport fixed = closeness_fixed(
      Hypergraph(24, 3), BarrierVariant::odd_intersection,
      VertexSet::prefix(12));
  CHECK(fixed.distance ==
        binom_u64(12, 1) * binom_u64(12, 2) + binom_u64(12, 3));
}

TEST_CASE("fractional threshold bounds at the known pairs") {
  CHECK(cstar_space_lower(5, 2) == Rational(61, 125));
  CHECK(cstar_space_lower(7, 3) == Rational(1105, 2401));
  CHECK(cstar_upper_kot(5, 4) == Rational(1, 5));  // ell = k-1 path
  CHECK(cstar_upper_kot(4, 2) == Rational(7, 16));

  REQUIRE(cstar_known(5, 2).has_value());
  CHECK(*cstar_known(5, 2) == Rational(61, 125));
  REQUIRE(cstar_known(7, 3).has_value());
  CHECK(*cstar_known(7, 3) == Rational(1105, 2401));
  CHECK_FALSE(cstar_known(9, 2).has_value());
  CHECK(cstar_known(3, 1).has_value());  // ell >= k-4 holds for every ell

  CHECK_THROWS_AS(cstar_space_lower(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(cstar_upper_kot(5, 0), std::invalid_argument);
}

TEST_CASE("lower bounds never exceed the upper bounds") {
  for (int k = 3; k <= 12; ++k) {
    for (int ell = 1; ell <= k - 2; ++ell) {
      REQUIRE(cstar_space_lower(k, ell) <= cstar_upper_kot(k, ell));
    }
    // at ell = k-2 the two coincide
    CHECK(cstar_space_lower(k, k - 2) == cstar_upper_kot(k, k - 2));
  }
}

TEST_CASE("both bounds sit below one half in the upper range") {
  for (int k = 3; k <= 12; ++k) {
    for (int ell = (k + 1) / 2; ell <= k - 1; ++ell) {
      REQUIRE(cstar_space_lower(k, ell) < Rational(1, 2));
      REQUIRE(cstar_upper_kot(k, ell) < Rational(1, 2));
    }
  }
}

TEST_CASE("regime comparison at exact sizes") {
  const RegimeReport wide = regime_compare(3, 2, 60);
  CHECK(wide.dominant == RegimeReport::Dominant::delta);
  CHECK(wide.delta_term > wide.space_term);

  const RegimeReport tied = regime_compare(3, 1, 6);
  CHECK(tied.dominant == RegimeReport::Dominant::tie);
  CHECK(tied.delta_term == 4);
  CHECK(tied.space_term == 4);
  CHECK(tied.crossover_hint == Rational(3 * 306853, 1000000));

  for (int n : {6, 12, 30}) {
    const RegimeReport r = regime_compare(3, 1, n);
    const bool matches =
        (r.dominant == RegimeReport::Dominant::delta &&
         r.delta_term > r.space_term) ||
        (r.dominant == RegimeReport::Dominant::space &&
         r.delta_term < r.space_term) ||
        (r.dominant == RegimeReport::Dominant::tie &&
         r.delta_term == r.space_term);
    CHECK(matches);
  }
}

TEST_CASE("degree hypotheses on the worked instances") {
  const HypothesisReport complete =
      check_hypotheses(Hypergraph::complete(6, 3), 1, 1, Rational(1, 100));
  CHECK(complete.degree_clause);
  CHECK(complete.fractional_clause);
  CHECK(complete.all_clauses);
  REQUIRE(complete.perfect_matching.has_value());
  CHECK(*complete.perfect_matching);
  CHECK(complete.consistent);

  const HypothesisReport star =
      check_hypotheses(space_barrier(6, 3), 1, 1, Rational(1, 100));
  CHECK_FALSE(star.degree_clause);  // degree equals the threshold, not above
  CHECK(star.delta_ell == star.delta_threshold_value);

  const HypothesisReport barrier = check_hypotheses(
      build_barrier({6, 3, 3, BarrierVariant::even_intersection}), 1, 1,
      Rational(1, 100));
  CHECK_FALSE(barrier.degree_clause);
  REQUIRE(barrier.perfect_matching.has_value());
  CHECK_FALSE(*barrier.perfect_matching);
  CHECK(barrier.consistent);

  // no confirmed fractional threshold at (k, ell') = (7, 1)
  CHECK_THROWS_AS(check_hypotheses(Hypergraph::complete(14, 7), 1, 1,
                                   Rational(1, 100)),
                  std::invalid_argument);
}

TEST_CASE("dense-vertex hypotheses") {
  const DenseVertexReport complete = check_dense_vertex_hypotheses(
      Hypergraph::complete(6, 3), 1, Rational(1, 2), Rational(1, 4));
  CHECK(complete.vertex_degree_clause);
  CHECK(complete.ell_degree_clause);
  CHECK(complete.rich_vertex_count == 6);
  CHECK(complete.rich_vertices_clause);
  CHECK(complete.all_clauses);
  CHECK(complete.consistent);

  const DenseVertexReport empty = check_dense_vertex_hypotheses(
      Hypergraph(6, 3), 1, Rational(1, 2), Rational(1, 4));
  CHECK_FALSE(empty.vertex_degree_clause);
  CHECK_FALSE(empty.all_clauses);

  CHECK_THROWS_AS(check_dense_vertex_hypotheses(Hypergraph::complete(6, 3), 1,
                                                Rational(1, 4), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("threshold reports assemble the exact terms") {
  const ThresholdReport report = threshold_report(3, 1, 6);
  CHECK(report.delta == 4);
  CHECK(report.space == 4);
  CHECK(report.conjectured == 5);
  CHECK_FALSE(report.brute_force.has_value());
}
