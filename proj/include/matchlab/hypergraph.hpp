#pragma once

#include <cstdint>
#include <vector>

#include "matchlab/combinat.hpp"
#include "matchlab/numeric.hpp"
#include "matchlab/vertex_set.hpp"

namespace matchlab {

// Dense-bitset storage is sized for desk-scale instances.
inline constexpr std::uint64_t kMaxEdgeRanks = 10'000'000;

// A k-uniform hypergraph on n labeled vertices {0..n-1}. Edges are stored as
// a dense bitset indexed by colex rank, which makes membership O(1) and
// symmetric differences word-parallel. Values are treated as immutable once
// built; all query operations are const and safe to run concurrently.
class Hypergraph {
 public:
  // Empty edge set. Requires 2 <= k <= 64 and 0 <= n <= 64. n < k is
  // allowed (the edge set is necessarily empty); it arises from induced
  // subhypergraphs on fewer than k vertices.
  Hypergraph(int n, int k);

  static Hypergraph complete(int n, int k);

  // Includes each k-subset independently with the given probability, which
  // must be a rational in [0, 1] with denominator < 2^63. The draw sequence
  // is fixed by the seed, so equal seeds give equal hypergraphs.
  static Hypergraph random(int n, int k, const Rational& edge_probability,
                           std::uint64_t seed);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t rank_count() const { return rank_count_; }  // C(n, k)
  std::uint64_t edge_count() const;

  bool contains_rank(std::uint64_t rank) const;
  bool contains(VertexSet edge) const;

  void insert(VertexSet edge);
  void insert_rank(std::uint64_t rank);
  void erase_rank(std::uint64_t rank);
  void toggle_rank(std::uint64_t rank);

  // Ascending colex rank order.
  std::vector<std::uint64_t> edge_ranks() const;
  std::vector<VertexSet> edges() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  friend Hypergraph complement(const Hypergraph& h);
  friend BigInt symmetric_difference(const Hypergraph& a,
                                     const Hypergraph& b);

  int n_;
  int k_;
  std::uint64_t rank_count_;
  std::vector<std::uint64_t> words_;
};

// Number of edges containing S. Requires |S| <= k.
BigInt degree_of_set(const Hypergraph& h, VertexSet s);

struct MinDegree {
  BigInt degree;
  VertexSet witness;  // first ell-set (in colex order) attaining the minimum
};

// Minimum degree over all ell-subsets of the vertex set, 1 <= ell <= k-1.
// ell = 0 is permitted and returns the total edge count with an empty
// witness.
MinDegree min_ell_degree(const Hypergraph& h, int ell);

// The (k-1)-subsets T with T + {v} an edge, ascending by mask.
std::vector<VertexSet> neighborhood(const Hypergraph& h, int v);

// C(n-1, k-1) minus the neighborhood size: (k-1)-subsets of V - {v} that do
// not form an edge with v.
BigInt non_neighbor_count(const Hypergraph& h, int v);

Hypergraph complement(const Hypergraph& h);

// Subhypergraph induced by X, with vertices relabeled to 0..|X|-1 in label
// order. |X| < k yields the empty hypergraph on |X| vertices.
Hypergraph induced(const Hypergraph& h, VertexSet x);

// |E(a) xor E(b)|; requires matching n and k.
BigInt symmetric_difference(const Hypergraph& a, const Hypergraph& b);

}  // namespace matchlab
