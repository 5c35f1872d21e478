#pragma once

#include <string>
#include <vector>

#include "matchlab/hypergraph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

// Parity barriers: split the vertex set into A = {0..a-1} and B = rest and
// keep exactly the k-sets whose intersection with A has the chosen parity.
// Minimum degrees depend only on |A|, so one representative per a suffices.
enum class BarrierVariant {
  odd_intersection,   // edges meet A in an odd number of vertices
  even_intersection,  // edges meet A in an even number of vertices
};

const char* variant_name(BarrierVariant v);  // "odd" / "even"

struct BarrierSpec {
  int n = 0;
  int k = 0;
  int a = 0;  // |A|, 0 <= a <= n
  BarrierVariant variant = BarrierVariant::even_intersection;
};

Hypergraph build_barrier(const BarrierSpec& spec);

// Which clause of the matching-free family definition admits a member.
enum class FamilyClause {
  even_intersection_odd_part,       // even variant, |A| odd
  odd_intersection_part_mismatch,   // odd variant, |A| and n/k of opposite parity
};

struct ExtFamilyMember {
  BarrierSpec spec;
  FamilyClause clause;
};

// Every admissible barrier on n vertices (k | n): the even variant for every
// odd a, and the odd variant for every a whose parity differs from n/k. A
// perfect matching would give |A| as a sum of n/k numbers of the edge
// parity, which is impossible in exactly these cases, so every member is
// matching-free. Members are listed even variant first, then odd, ascending
// in a; degenerate members (empty edge sets) are kept for completeness.
std::vector<ExtFamilyMember> ext_family(int n, int k);

// Minimum ell-degree of a barrier via parity sums: an ell-set with j
// vertices in A has degree sum_{i = parity - j mod 2} C(a-j, i) *
// C(n-a-ell+j, k-ell-i); minimize over feasible j. Exact, no enumeration.
BigInt barrier_min_degree_closed_form(const BarrierSpec& spec, int ell);

struct DeltaThreshold {
  BigInt value;
  ExtFamilyMember argmax;  // first member attaining the maximum
};

// Largest minimum ell-degree over the matching-free barrier family.
DeltaThreshold delta_threshold(int n, int k, int ell);

// The space barrier: A = first n/k - 1 vertices, edges = all k-sets meeting
// A. Matching-free because each edge spends an A-vertex and there are too
// few. Requires k | n and n >= 2k.
Hypergraph space_barrier(int n, int k);

// C(n-ell, k-ell) - C((1-1/k)n - ell + 1, k-ell): the minimum ell-degree of
// the space barrier (attained by ell-sets inside B).
BigInt space_barrier_degree(int n, int k, int ell);

// max{delta_threshold, space_barrier_degree} + 1.
BigInt conjectured_threshold(int n, int k, int ell);

}  // namespace matchlab
