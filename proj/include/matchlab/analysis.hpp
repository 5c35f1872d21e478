#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "matchlab/extremal.hpp"
#include "matchlab/hypergraph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

struct ThresholdReport {
  int k = 0;
  int ell = 0;
  int n = 0;
  BigInt delta;        // barrier-family threshold
  BigInt space;        // space-barrier minimum ell-degree
  BigInt conjectured;  // max of the two, plus one
  std::optional<BigInt> brute_force;      // exact m_ell(k, n) when computed
  std::optional<Hypergraph> witness;      // matching-free, min degree = m-1
  std::string notes;
};

ThresholdReport threshold_report(int k, int ell, int n);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Exact smallest m such that minimum ell-degree >= m forces a perfect
// matching on n vertices: 1 + the largest minimum ell-degree among
// matching-free hypergraphs. Adding edges never destroys a perfect matching
// and never lowers a degree, so the search ranges over matching-free edge
// sets only, pruned against an optimistic degree bound. When n = 2k a
// perfect matching is exactly a complementary pair of edges, so the
// edge-maximal matching-free hypergraphs are the one-per-pair selections and
// are enumerated directly. Top-level branches run in parallel with a
// deterministic merge. Throws BudgetExhaustedError with the best bound found
// when the node budget runs out, and SizeCapError off the feasible grid.
ThresholdReport brute_force_threshold(int k, int ell, int n,
                                      std::uint64_t budget =
                                          kDefaultSearchBudget);

inline constexpr int kClosenessEnumerationCap = 22;

struct ClosenessReport {
  BarrierVariant variant = BarrierVariant::odd_intersection;
  VertexSet part_a;  // bipartition class achieving the minimum, |A|=floor(n/2)
  BigInt distance;   // |E(H) xor E(target)| at that bipartition
  Rational epsilon;  // distance / n^k
};

// Edit distance from H to the nearest balanced barrier of the given variant.
// Every isomorphic copy of the balanced barrier on the same vertex set is
// determined by its bipartition, so the search minimizes over all
// floor(n/2)-subsets A. Capped at n <= 22; beyond that supply a bipartition.
ClosenessReport closeness(const Hypergraph& h, BarrierVariant variant);
ClosenessReport closeness_fixed(const Hypergraph& h, BarrierVariant variant,
                                VertexSet part_a);

// 1 - ((k-1)/k)^(k-ell): the fractional-threshold lower bound coming from
// the space barrier, exact.
Rational cstar_space_lower(int k, int ell);

// (k-ell)/k - (k-ell-1)/k^(k-ell) for ell <= k-2; 1/k for ell = k-1.
Rational cstar_upper_kot(int k, int ell);

// The confirmed exact fractional threshold where known (ell >= k-4):
// 1 - ((k-1)/k)^(k-ell). nullopt when only conjectured.
std::optional<Rational> cstar_known(int k, int ell);

struct RegimeReport {
  BigInt delta_term;
  BigInt space_term;
  enum class Dominant { delta, space, tie } dominant =
      Dominant::tie;
  Rational crossover_hint;  // (1 - ln 2) * k, advisory only; uses
                            // ln 2 ~ 693147/1000000
};

// Compares the two threshold terms at this exact n. The crossover hint is
// the asymptotic rule of thumb: above it the barrier-family term tends to
// dominate, below it the space term does.
RegimeReport regime_compare(int k, int ell, int n);

struct HypothesisReport {
  int ell = 0;
  int ell_prime = 0;
  BigInt delta_ell;                // minimum ell-degree of H
  BigInt delta_threshold_value;    // barrier-family threshold at (n, k, ell)
  bool degree_clause = false;      // delta_ell > threshold
  BigInt delta_ell_prime;
  Rational fractional_threshold;   // (c* + theta) * C(n-ell', k-ell')
  bool fractional_clause = false;  // delta_ell_prime > fractional threshold
  bool all_clauses = false;
  std::optional<bool> perfect_matching;  // evaluated at desk scale
  bool consistent = true;  // false iff all clauses hold yet no matching
};

// Evaluates the two degree hypotheses exactly against H and, at desk scale,
// records whether a perfect matching in fact exists. Requires k | n and a
// known fractional threshold for ell'.
HypothesisReport check_hypotheses(const Hypergraph& h, int ell, int ell_prime,
                                  const Rational& theta);

struct DenseVertexReport {
  BigInt delta_one;
  Rational vertex_degree_threshold;   // delta' * C(n-1, k-1)
  bool vertex_degree_clause = false;  // delta_1 >= threshold
  BigInt delta_ell;
  Rational ell_degree_threshold;      // (c* + eps) * C(n-ell, k-ell)
  bool ell_degree_clause = false;
  BigInt rich_vertex_count;  // x with d(x) >= (1 - delta' + eps) * C(n-1,k-1)
  Rational rich_vertex_threshold;     // eps * n
  bool rich_vertices_clause = false;
  bool all_clauses = false;
  std::optional<bool> perfect_matching;
  bool consistent = true;
};

// The companion hypothesis set: a minimum vertex degree, a fractional-level
// ell-degree, and at least eps*n vertices of near-complement degree.
// Requires 0 < eps <= delta' and a known fractional threshold for ell.
DenseVertexReport check_dense_vertex_hypotheses(const Hypergraph& h, int ell,
                                                const Rational& delta_prime,
                                                const Rational& eps);

}  // namespace matchlab
