#include "matchlab/matching.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "matchlab/errors.hpp"

namespace matchlab {

namespace {

struct LocalEdges {
  std::vector<std::uint64_t> masks;              // vertex masks
  std::vector<std::uint64_t> ranks;              // parallel colex ranks
  std::vector<std::vector<int>> incident;        // edge indices per vertex
};

// Edges of h whose vertices all lie in `allowed`, with incidence lists.
LocalEdges edges_within(const Hypergraph& h, VertexSet allowed) {
  LocalEdges out;
  out.incident.resize(static_cast<std::size_t>(h.n()));
  const std::vector<std::uint64_t> ranks = h.edge_ranks();
  for (std::uint64_t rank : ranks) {
    const VertexSet e = unrank_colex(rank, h.k(), h.n());
    if (!allowed.contains_all(e)) continue;
    const int index = static_cast<int>(out.masks.size());
    out.masks.push_back(e.bits);
    out.ranks.push_back(rank);
    for (int v : e.vertices()) out.incident[v].push_back(index);
  }
  return out;
}

struct PmSearch {
  const LocalEdges& edges;
  std::uint64_t target;
  std::vector<std::uint64_t> chosen;

  bool solve(std::uint64_t covered) {
    if (covered == target) return true;
    // Branch on the uncovered vertex with the fewest usable edges.
    int best_vertex = -1;
    int best_count = -1;
    std::uint64_t uncovered = target & ~covered;
    while (uncovered != 0) {
      const int v = std::countr_zero(uncovered);
      uncovered &= uncovered - 1;
      int count = 0;
      for (int e : edges.incident[v]) {
        if ((edges.masks[e] & covered) == 0) ++count;
      }
      if (best_count < 0 || count < best_count) {
        best_count = count;
        best_vertex = v;
        if (count == 0) return false;
      }
    }
    for (int e : edges.incident[best_vertex]) {
      if ((edges.masks[e] & covered) != 0) continue;
      chosen.push_back(edges.ranks[e]);
      if (solve(covered | edges.masks[e])) return true;
      chosen.pop_back();
    }
    return false;
  }
};

std::optional<std::vector<std::uint64_t>> find_pm(const Hypergraph& h,
                                                  VertexSet target) {
  if (target.size() % h.k() != 0) return std::nullopt;
  if (target.empty()) return std::vector<std::uint64_t>{};
  const LocalEdges local = edges_within(h, target);
  PmSearch search{local, target.bits, {}};
  if (!search.solve(0)) return std::nullopt;
  std::sort(search.chosen.begin(), search.chosen.end());
  return std::move(search.chosen);
}

struct MaxSearch {
  const LocalEdges& edges;
  int k;
  std::uint64_t all;
  std::vector<std::uint64_t> current;
  std::vector<std::uint64_t> best;

  // Greedy maximal packing of edges avoiding `blocked`; any matching among
  // those edges has at most k times as many edges.
  int greedy_packing(std::uint64_t blocked) const {
    int size = 0;
    std::uint64_t used = blocked;
    for (std::size_t e = 0; e < edges.masks.size(); ++e) {
      if ((edges.masks[e] & used) == 0) {
        used |= edges.masks[e];
        ++size;
      }
    }
    return size;
  }

  void run(std::uint64_t covered, std::uint64_t skipped) {
    if (current.size() > best.size()) best = current;
    const std::uint64_t blocked = covered | skipped;
    const int free_vertices = std::popcount(all & ~blocked);
    int bound = free_vertices / k;
    if (static_cast<int>(current.size()) + bound <= static_cast<int>(best.size())) return;
    const int greedy = greedy_packing(blocked);
    bound = std::min(bound, k * greedy);
    if (greedy == 0 ||
        static_cast<int>(current.size()) + bound <= static_cast<int>(best.size())) {
      return;
    }
    // Branch on the free vertex with the fewest usable edges: each usable
    // edge through it, then leaving it uncovered.
    int best_vertex = -1;
    int best_count = -1;
    std::uint64_t free = all & ~blocked;
    while (free != 0) {
      const int v = std::countr_zero(free);
      free &= free - 1;
      int count = 0;
      for (int e : edges.incident[v]) {
        if ((edges.masks[e] & blocked) == 0) ++count;
      }
      if (count > 0 && (best_count < 0 || count < best_count)) {
        best_count = count;
        best_vertex = v;
      }
    }
    if (best_vertex < 0) return;
    for (int e : edges.incident[best_vertex]) {
      if ((edges.masks[e] & blocked) != 0) continue;
      current.push_back(edges.ranks[e]);
      run(covered | edges.masks[e], skipped);
      current.pop_back();
    }
    run(covered, skipped | (std::uint64_t{1} << best_vertex));
  }
};

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (~bound + 1) % bound;
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) return draw % bound;
  }
}

void validate_pair(const Hypergraph& h, int x, int y) {
  if (x < 0 || x >= h.n() || y < 0 || y >= h.n()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (x == y) throw std::invalid_argument("x and y must differ");
}

// Both H[X + {x}] and H[X + {y}] perfectly matched?
bool double_cover(const Hypergraph& h, VertexSet x_set, int x, int y) {
  return find_pm(h, x_set.with(x)).has_value() &&
         find_pm(h, x_set.with(y)).has_value();
}

}  // namespace

Matching Matching::from_ranks(const Hypergraph& h,
                              std::vector<std::uint64_t> ranks) {
  Matching m;
  m.k_ = h.k();
  m.n_ = h.n();
  std::sort(ranks.begin(), ranks.end());
  for (std::uint64_t rank : ranks) {
    if (!h.contains_rank(rank)) {
      throw std::invalid_argument("matching edge not present in hypergraph");
    }
    const VertexSet e = unrank_colex(rank, h.k(), h.n());
    if (m.support_.intersects(e)) {
      throw std::invalid_argument("matching edges are not disjoint");
    }
    m.support_ = m.support_ | e;
  }
  m.ranks_ = std::move(ranks);
  return m;
}

std::vector<VertexSet> Matching::edges() const {
  std::vector<VertexSet> out;
  out.reserve(ranks_.size());
  for (std::uint64_t rank : ranks_) out.push_back(unrank_colex(rank, k_, n_));
  return out;
}

std::optional<std::vector<std::uint64_t>> perfect_matching_on(
    const Hypergraph& h, VertexSet target) {
  if (!VertexSet::full(h.n()).contains_all(target)) {
    throw std::invalid_argument("target not within vertex set");
  }
  return find_pm(h, target);
}

PerfectMatchingResult has_perfect_matching(const Hypergraph& h) {
  auto ranks = find_pm(h, VertexSet::full(h.n()));
  if (!ranks) return {false, std::nullopt};
  return {true, Matching::from_ranks(h, *std::move(ranks))};
}

MaxMatchingResult max_matching(const Hypergraph& h) {
  const LocalEdges local = edges_within(h, VertexSet::full(h.n()));
  MaxSearch search{local, h.k(), VertexSet::full(h.n()).bits, {}, {}};
  search.run(0, 0);
  Matching witness = Matching::from_ranks(h, search.best);
  return {witness.size(), std::move(witness)};
}

bool is_absorbing(const Hypergraph& h, const Matching& m, VertexSet w) {
  if (!VertexSet::full(h.n()).contains_all(w)) {
    throw std::invalid_argument("is_absorbing: W not within vertex set");
  }
  if (w.intersects(m.support())) {
    throw std::invalid_argument("is_absorbing: W meets the matching support");
  }
  for (std::uint64_t rank : m.ranks()) {
    if (!h.contains_rank(rank)) {
      throw std::invalid_argument("is_absorbing: matching not within H");
    }
  }
  return find_pm(h, m.support()).has_value() &&
         find_pm(h, m.support() | w).has_value();
}

BigInt absorbing_set_count(const Hypergraph& h, int x, int y) {
  validate_pair(h, x, y);
  if (h.n() > kAbsorbingEnumerationCap) {
    throw SizeCapError(
        "absorbing_set_count enumerates all (2k-1)-sets and is capped at "
        "n <= 14; use the sampled estimate for larger instances");
  }
  const std::vector<int> free =
      (VertexSet::full(h.n()).without(x).without(y)).vertices();
  const int set_size = 2 * h.k() - 1;
  std::uint64_t count = 0;
  for_each_subset(static_cast<int>(free.size()), set_size,
                  [&](VertexSet pick, std::uint64_t) {
                    VertexSet x_set;
                    for (int i : pick.vertices()) x_set = x_set.with(free[i]);
                    if (double_cover(h, x_set, x, y)) ++count;
                  });
  return BigInt(count);
}

AbsorbingSample absorbing_set_count_sampled(const Hypergraph& h, int x, int y,
                                            std::uint64_t samples,
                                            std::uint64_t seed) {
  validate_pair(h, x, y);
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const std::vector<int> free =
      (VertexSet::full(h.n()).without(x).without(y)).vertices();
  const int set_size = 2 * h.k() - 1;
  const std::uint64_t universe =
      binom_u64(static_cast<int>(free.size()), set_size);
  AbsorbingSample out;
  out.samples = samples;
  if (universe == 0) {
    out.estimate = 0;
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t rank = uniform_below(rng, universe);
    const VertexSet pick =
        unrank_colex(rank, set_size, static_cast<int>(free.size()));
    VertexSet x_set;
    for (int i : pick.vertices()) x_set = x_set.with(free[i]);
    if (double_cover(h, x_set, x, y)) ++out.hits;
  }
  out.estimate = Rational(BigInt(out.hits) * universe, BigInt(samples));
  return out;
}

OverlapStats overlap_stats(const Hypergraph& h, int x, int y,
                           const Rational& gamma) {
  validate_pair(h, x, y);
  if (gamma <= 0 || gamma >= 1) {
    throw std::invalid_argument("gamma must lie strictly between 0 and 1");
  }
  OverlapStats out;
  const std::vector<int> free =
      (VertexSet::full(h.n()).without(x).without(y)).vertices();
  std::uint64_t both = 0, neither = 0;
  for_each_subset(static_cast<int>(free.size()), h.k() - 1,
                  [&](VertexSet pick, std::uint64_t) {
                    VertexSet t;
                    for (int i : pick.vertices()) t = t.with(free[i]);
                    const bool at_x = h.contains(t.with(x));
                    const bool at_y = h.contains(t.with(y));
                    if (at_x && at_y) ++both;
                    if (!at_x && !at_y) ++neither;
                  });
  out.common_neighbors = both;
  out.common_non_neighbors = neither;

  // A link vertex z is good when its common neighborhoods with both x and y
  // reach gamma * n^(k-1); z ranges over the whole vertex set.
  const BigInt threshold_rhs =
      numerator(gamma) * int_pow(BigInt(h.n()), h.k() - 1);
  const BigInt denom = denominator(gamma);
  const auto rich = [&](int u, int v) {
    if (u == v) return denom * degree_of_set(h, VertexSet{}.with(u)) >=
                       threshold_rhs;
    std::uint64_t common = 0;
    const std::vector<int> rest =
        (VertexSet::full(h.n()).without(u).without(v)).vertices();
    for_each_subset(static_cast<int>(rest.size()), h.k() - 1,
                    [&](VertexSet pick, std::uint64_t) {
                      VertexSet t;
                      for (int i : pick.vertices()) t = t.with(rest[i]);
                      if (h.contains(t.with(u)) && h.contains(t.with(v))) {
                        ++common;
                      }
                    });
    return denom * BigInt(common) >= threshold_rhs;
  };
  int good = 0;
  for (int z = 0; z < h.n(); ++z) {
    if (rich(x, z) && rich(y, z)) ++good;
  }
  out.good_link_vertices = good;
  return out;
}

PairClassification classify_pair(const Hypergraph& h, int x, int y,
                                 const Rational& gamma) {
  const OverlapStats stats = overlap_stats(h, x, y, gamma);
  const BigInt num = numerator(gamma);
  const BigInt den = denominator(gamma);
  const BigInt neighbor_threshold = num * int_pow(BigInt(h.n()), h.k() - 1);
  const BigInt link_threshold = num * h.n();
  const bool many_common = den * stats.common_neighbors >= neighbor_threshold;
  const bool many_links =
      den * BigInt(stats.good_link_vertices) >= link_threshold;
  PairClassification out;
  out.absorbing_rich = many_common || many_links;
  out.barrier_indicating =
      (den * stats.common_neighbors < neighbor_threshold) &&
      (den * BigInt(stats.good_link_vertices) <= link_threshold);
  return out;
}

}  // namespace matchlab
