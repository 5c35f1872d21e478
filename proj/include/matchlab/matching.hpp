#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchlab/hypergraph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

// A set of pairwise-disjoint edges of a host hypergraph, held as sorted
// colex ranks with the support cached.
class Matching {
 public:
  Matching() = default;

  // Validates that every rank is an edge of h and that edges are pairwise
  // disjoint.
  static Matching from_ranks(const Hypergraph& h,
                             std::vector<std::uint64_t> ranks);

  const std::vector<std::uint64_t>& ranks() const { return ranks_; }
  VertexSet support() const { return support_; }
  int size() const { return static_cast<int>(ranks_.size()); }
  std::vector<VertexSet> edges() const;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<std::uint64_t> ranks_;
  VertexSet support_;
};

// Exact search for a perfect matching of the vertices in `target` using only
// edges of h contained in `target`. Complete backtracking: the uncovered
// vertex with the fewest usable edges is branched on, which fails fast on
// barrier-style instances. Returns the edge ranks of a matching, or nullopt.
std::optional<std::vector<std::uint64_t>> perfect_matching_on(
    const Hypergraph& h, VertexSet target);

struct PerfectMatchingResult {
  bool exists = false;
  std::optional<Matching> witness;
};

// Perfect matching decision for the whole vertex set; false immediately when
// k does not divide n.
PerfectMatchingResult has_perfect_matching(const Hypergraph& h);

struct MaxMatchingResult {
  int size = 0;
  Matching witness;
};

// Maximum number of pairwise-disjoint edges, by branch and bound. The bound
// combines floor(free-vertices / k) with k times a greedy maximal packing of
// the remaining usable edges; branching is complete so the result is exact.
MaxMatchingResult max_matching(const Hypergraph& h);

// True iff both H[support(M)] and H[support(M) + W] have perfect matchings.
// W must be disjoint from the support. The first condition holds by
// construction for a valid matching but is re-verified.
bool is_absorbing(const Hypergraph& h, const Matching& m, VertexSet w);

inline constexpr int kAbsorbingEnumerationCap = 14;

// Exact number of (2k-1)-subsets X of V - {x, y} such that both H[X + {x}]
// and H[X + {y}] have perfect matchings. Refuses n > 14 (use the sampled
// estimate instead).
BigInt absorbing_set_count(const Hypergraph& h, int x, int y);

struct AbsorbingSample {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  Rational estimate;  // hits/samples * C(n-2, 2k-1); an estimate, not exact
};

AbsorbingSample absorbing_set_count_sampled(const Hypergraph& h, int x, int y,
                                            std::uint64_t samples,
                                            std::uint64_t seed);

struct OverlapStats {
  BigInt common_neighbors;      // (k-1)-sets forming an edge with both x and y
  BigInt common_non_neighbors;  // (k-1)-sets avoiding x,y adjacent to neither
  int good_link_vertices = 0;   // z with |N(x) ^ N(z)| and |N(y) ^ N(z)| both
                                // >= gamma * n^(k-1)
};

OverlapStats overlap_stats(const Hypergraph& h, int x, int y,
                           const Rational& gamma);

// The two buckets used by the absorbing analysis. A pair is absorbing-rich
// when it has many common neighbors or many good link vertices (thresholds
// gamma * n^(k-1) and gamma * n, weak inequalities); it is
// barrier-indicating when common neighbors fall strictly below the first
// threshold and good link vertices do not exceed the second. Every pair
// lands in at least one bucket.
struct PairClassification {
  bool absorbing_rich = false;
  bool barrier_indicating = false;
};

PairClassification classify_pair(const Hypergraph& h, int x, int y,
                                 const Rational& gamma);

}  // namespace matchlab
