#include "matchlab/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchlab/combinat.hpp"

namespace matchlab {

const char* variant_name(BarrierVariant v) {
  return v == BarrierVariant::odd_intersection ? "odd" : "even";
}

namespace {

void validate_spec(const BarrierSpec& spec) {
  if (spec.k < 2 || spec.k > spec.n || spec.n > kMaxVertices) {
    throw std::invalid_argument("barrier: need 2 <= k <= n <= 64");
  }
  if (spec.a < 0 || spec.a > spec.n) {
    throw std::invalid_argument("barrier: |A| outside [0, n]");
  }
}

int wanted_parity(BarrierVariant v) {
  return v == BarrierVariant::odd_intersection ? 1 : 0;
}

}  // namespace

Hypergraph build_barrier(const BarrierSpec& spec) {
  validate_spec(spec);
  Hypergraph h(spec.n, spec.k);
  const VertexSet part_a = VertexSet::prefix(spec.a);
  const int parity = wanted_parity(spec.variant);
  for_each_subset(spec.n, spec.k, [&](VertexSet e, std::uint64_t rank) {
    if (((e & part_a).size() & 1) == parity) h.insert_rank(rank);
  });
  return h;
}

std::vector<ExtFamilyMember> ext_family(int n, int k) {
  if (k < 2 || k > n || n > kMaxVertices) {
    throw std::invalid_argument("ext_family: need 2 <= k <= n <= 64");
  }
  if (n % k != 0) throw std::invalid_argument("ext_family: k must divide n");
  const int quotient_parity = (n / k) & 1;
  std::vector<ExtFamilyMember> members;
  for (int a = 1; a <= n; a += 2) {
    members.push_back({{n, k, a, BarrierVariant::even_intersection},
                       FamilyClause::even_intersection_odd_part});
  }
  const int start = quotient_parity == 1 ? 0 : 1;
  for (int a = start; a <= n; a += 2) {
    members.push_back({{n, k, a, BarrierVariant::odd_intersection},
                       FamilyClause::odd_intersection_part_mismatch});
  }
  return members;
}

BigInt barrier_min_degree_closed_form(const BarrierSpec& spec, int ell) {
  validate_spec(spec);
  if (ell < 1 || ell >= spec.k) {
    throw std::invalid_argument("barrier degree: ell outside [1, k-1]");
  }
  const int n = spec.n, k = spec.k, a = spec.a;
  const int parity = wanted_parity(spec.variant);
  const int j_lo = std::max(0, ell - (n - a));
  const int j_hi = std::min(ell, a);
  bool have = false;
  BigInt best = 0;
  for (int j = j_lo; j <= j_hi; ++j) {
    // Extensions pick i extra vertices from A (a - j left) and the rest
    // from B; the edge parity constrains i to parity - j mod 2.
    const BigInt d = parity_sum(n - a - ell + j, a - j, k - ell,
                                parity_of(parity + j));
    if (!have || d < best) {
      have = true;
      best = d;
    }
  }
  return best;
}

DeltaThreshold delta_threshold(int n, int k, int ell) {
  if (ell < 1 || ell >= k) {
    throw std::invalid_argument("delta_threshold: ell outside [1, k-1]");
  }
  const std::vector<ExtFamilyMember> family = ext_family(n, k);
  bool have = false;
  DeltaThreshold best;
  for (const ExtFamilyMember& member : family) {
    BigInt value = barrier_min_degree_closed_form(member.spec, ell);
    if (!have || value > best.value) {
      have = true;
      best = {std::move(value), member};
    }
  }
  return best;
}

Hypergraph space_barrier(int n, int k) {
  if (k < 2 || n % k != 0 || n < 2 * k || n > kMaxVertices) {
    throw std::invalid_argument(
        "space_barrier: need k | n and 2k <= n <= 64");
  }
  Hypergraph h(n, k);
  const VertexSet part_a = VertexSet::prefix(n / k - 1);
  for_each_subset(n, k, [&](VertexSet e, std::uint64_t rank) {
    if (e.intersects(part_a)) h.insert_rank(rank);
  });
  return h;
}

BigInt space_barrier_degree(int n, int k, int ell) {
  if (k < 2 || n % k != 0 || n < 2 * k || n > kMaxVertices) {
    throw std::invalid_argument(
        "space_barrier_degree: need k | n and 2k <= n <= 64");
  }
  if (ell < 1 || ell >= k) {
    throw std::invalid_argument("space_barrier_degree: ell outside [1, k-1]");
  }
  return binom(n - ell, k - ell) - binom(n - n / k - ell + 1, k - ell);
}

BigInt conjectured_threshold(int n, int k, int ell) {
  const BigInt delta = delta_threshold(n, k, ell).value;
  const BigInt space = space_barrier_degree(n, k, ell);
  return (delta > space ? delta : space) + 1;
}

}  // namespace matchlab
