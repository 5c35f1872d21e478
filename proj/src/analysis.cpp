#include "matchlab/analysis.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matchlab/combinat.hpp"
#include "matchlab/errors.hpp"
#include "matchlab/matching.hpp"

namespace matchlab {

namespace {

constexpr int kParallelTasks = 8;  // fixed so runs merge identically

struct SearchOutcome {
  bool found = false;
  std::uint64_t best_min_degree = 0;
  std::vector<std::uint64_t> best_edges;  // ranks
  bool exhausted_budget = false;
};

// Merge preferring strictly larger minima; on ties the earlier task wins,
// so the combined outcome is independent of scheduling.
SearchOutcome merge_outcomes(const std::vector<SearchOutcome>& parts) {
  SearchOutcome merged;
  for (const SearchOutcome& part : parts) {
    merged.exhausted_budget |= part.exhausted_budget;
    if (part.found &&
        (!merged.found || part.best_min_degree > merged.best_min_degree)) {
      merged.found = part.found;
      merged.best_min_degree = part.best_min_degree;
      merged.best_edges = part.best_edges;
    }
  }
  return merged;
}

// Incidence of edge ranks on ell-set indices, for incremental degree
// bookkeeping during the searches.
std::vector<std::vector<int>> ell_incidence(int n, int k, int ell,
                                            std::uint64_t rank_count) {
  std::vector<std::vector<int>> covers(rank_count);
  for_each_subset(n, k, [&](VertexSet e, std::uint64_t rank) {
    const std::vector<int> labels = e.vertices();
    for_each_subset(k, ell, [&](VertexSet pick, std::uint64_t) {
      VertexSet s;
      for (int i : pick.vertices()) s = s.with(labels[i]);
      covers[rank].push_back(static_cast<int>(rank_colex(s, ell)));
    });
  });
  return covers;
}

// When n = 2k a perfect matching is exactly an edge together with its
// complement, so the edge-maximal matching-free hypergraphs are the choices
// of one edge from each complementary pair.
SearchOutcome pair_selection_search(int k, int ell, int n,
                                    std::uint64_t budget) {
  const std::uint64_t rank_count = binom_u64(n, k);
  const int pair_count = static_cast<int>(rank_count / 2);
  if (pair_count > 40) {
    throw SizeCapError("pair search: more than 2^40 selections");
  }
  std::vector<std::array<std::uint64_t, 2>> pair_ranks;
  const VertexSet full_set = VertexSet::full(n);
  for_each_subset(n, k, [&](VertexSet e, std::uint64_t rank) {
    const std::uint64_t partner = rank_colex(full_set - e, k);
    if (rank < partner) pair_ranks.push_back({rank, partner});
  });

  const auto covers = ell_incidence(n, k, ell, rank_count);
  const std::uint64_t ell_count = binom_u64(n, ell);
  const std::uint64_t selections = std::uint64_t{1} << pair_count;

  const auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                             std::uint64_t share) {
    SearchOutcome out;
    std::vector<int> degree(ell_count);
    for (std::uint64_t sel = lo; sel < hi; ++sel) {
      if (share == 0) {
        out.exhausted_budget = true;
        return out;
      }
      --share;
      std::fill(degree.begin(), degree.end(), 0);
      for (int p = 0; p < pair_count; ++p) {
        const std::uint64_t rank = pair_ranks[p][(sel >> p) & 1];
        for (int s : covers[rank]) ++degree[s];
      }
      const int min_degree =
          *std::min_element(degree.begin(), degree.end());
      if (!out.found ||
          static_cast<std::uint64_t>(min_degree) > out.best_min_degree) {
        out.found = true;
        out.best_min_degree = static_cast<std::uint64_t>(min_degree);
        out.best_edges.clear();
        for (int p = 0; p < pair_count; ++p) {
          out.best_edges.push_back(pair_ranks[p][(sel >> p) & 1]);
        }
      }
    }
    return out;
  };

  const std::uint64_t chunk = (selections + kParallelTasks - 1) /
                              kParallelTasks;
  const std::uint64_t share = budget / kParallelTasks;
  std::vector<std::future<SearchOutcome>> futures;
  for (int t = 0; t < kParallelTasks; ++t) {
    const std::uint64_t lo = std::min<std::uint64_t>(t * chunk, selections);
    const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, selections);
    futures.push_back(std::async(std::launch::async, run_range, lo, hi,
                                 std::max<std::uint64_t>(share, 1)));
  }
  std::vector<SearchOutcome> parts;
  for (auto& f : futures) parts.push_back(f.get());
  return merge_outcomes(parts);
}

// General grid points: depth-first over edge ranks, include branch first.
// Including an edge is allowed only while the chosen set stays
// matching-free; the subtree is also cut when even taking every undecided
// edge cannot beat the incumbent minimum (degrees only grow with edges).
struct DfsSearch {
  int n, k, ell;
  std::uint64_t rank_count;
  const std::vector<std::vector<int>>* covers;
  std::uint64_t budget;
  Hypergraph chosen;
  std::vector<int> degree_chosen;
  std::vector<int> degree_upper;  // degrees if every undecided edge joins
  SearchOutcome out;

  bool spend_node() {
    if (budget == 0) {
      out.exhausted_budget = true;
      return false;
    }
    --budget;
    return true;
  }

  void record_leaf() {
    const int min_degree =
        *std::min_element(degree_chosen.begin(), degree_chosen.end());
    if (!out.found ||
        static_cast<std::uint64_t>(min_degree) > out.best_min_degree) {
      out.found = true;
      out.best_min_degree = static_cast<std::uint64_t>(min_degree);
      out.best_edges = chosen.edge_ranks();
    }
  }

  void run(std::uint64_t idx) {
    if (!spend_node()) return;
    if (idx == rank_count) {
      record_leaf();
      return;
    }
    if (out.found) {
      const int upper =
          *std::min_element(degree_upper.begin(), degree_upper.end());
      if (static_cast<std::uint64_t>(upper) <= out.best_min_degree) return;
    }
    // include idx if a perfect matching does not appear
    chosen.insert_rank(idx);
    if (!perfect_matching_on(chosen, VertexSet::full(n)).has_value()) {
      for (int s : (*covers)[idx]) ++degree_chosen[s];
      run(idx + 1);
      for (int s : (*covers)[idx]) --degree_chosen[s];
    }
    chosen.erase_rank(idx);
    // exclude idx
    for (int s : (*covers)[idx]) --degree_upper[s];
    run(idx + 1);
    for (int s : (*covers)[idx]) ++degree_upper[s];
  }
};

SearchOutcome dfs_search(int k, int ell, int n, std::uint64_t budget) {
  const std::uint64_t rank_count = binom_u64(n, k);
  if (rank_count > 64) {
    throw SizeCapError(
        "brute-force grid cap: C(n,k) <= 64 outside the n = 2k case");
  }
  const auto covers = ell_incidence(n, k, ell, rank_count);
  const std::uint64_t ell_count = binom_u64(n, ell);

  // Complete-hypergraph degrees seed the optimistic bound.
  std::vector<int> degree_full(ell_count, 0);
  for (std::uint64_t r = 0; r < rank_count; ++r) {
    for (int s : covers[r]) ++degree_full[s];
  }

  const int prefix_depth =
      rank_count >= 3 ? 3 : static_cast<int>(rank_count);
  const int tasks = 1 << prefix_depth;
  const std::uint64_t share =
      std::max<std::uint64_t>(budget / static_cast<std::uint64_t>(tasks), 1);

  const auto run_task = [&](int assignment) {
    DfsSearch search{n,
                     k,
                     ell,
                     rank_count,
                     &covers,
                     share,
                     Hypergraph(n, k),
                     std::vector<int>(ell_count, 0),
                     degree_full,
                     SearchOutcome{}};
    // Apply the prefix decisions; an infeasible include ends the task.
    for (int i = 0; i < prefix_depth; ++i) {
      const auto rank = static_cast<std::uint64_t>(i);
      if ((assignment >> i) & 1) {
        search.chosen.insert_rank(rank);
        if (perfect_matching_on(search.chosen, VertexSet::full(n))
                .has_value()) {
          return SearchOutcome{};
        }
        for (int s : covers[rank]) ++search.degree_chosen[s];
      } else {
        for (int s : covers[rank]) --search.degree_upper[s];
      }
    }
    search.run(static_cast<std::uint64_t>(prefix_depth));
    return search.out;
  };

  std::vector<std::future<SearchOutcome>> futures;
  for (int t = 0; t < tasks; ++t) {
    futures.push_back(std::async(std::launch::async, run_task, t));
  }
  std::vector<SearchOutcome> parts;
  for (auto& f : futures) parts.push_back(f.get());
  return merge_outcomes(parts);
}

std::optional<bool> desk_scale_pm(const Hypergraph& h) {
  if (h.n() > kClosenessEnumerationCap) return std::nullopt;
  return has_perfect_matching(h).exists;
}

Rational scaled_binom(const Rational& factor, int n, int r) {
  return factor * Rational(binom(n, r));
}

}  // namespace

ThresholdReport threshold_report(int k, int ell, int n) {
  ThresholdReport report;
  report.k = k;
  report.ell = ell;
  report.n = n;
  report.delta = delta_threshold(n, k, ell).value;
  report.space = space_barrier_degree(n, k, ell);
  report.conjectured = conjectured_threshold(n, k, ell);
  report.notes = "barrier-family and space terms computed exactly";
  return report;
}

ThresholdReport brute_force_threshold(int k, int ell, int n,
                                      std::uint64_t budget) {
  if (ell < 1 || ell >= k) {
    throw std::invalid_argument("brute force: ell outside [1, k-1]");
  }
  if (n % k != 0) {
    throw std::invalid_argument("brute force: k must divide n");
  }
  ThresholdReport report = threshold_report(k, ell, n);
  SearchOutcome outcome;
  if (n == 2 * k) {
    outcome = pair_selection_search(k, ell, n, budget);
    report.notes =
        "exhausted one-per-complementary-pair selections (n = 2k)";
  } else {
    outcome = dfs_search(k, ell, n, budget);
    report.notes = "depth-first search over matching-free edge sets";
  }
  if (outcome.exhausted_budget) {
    throw BudgetExhaustedError(
        "search budget exhausted; threshold >= " +
            to_string(BigInt(outcome.found ? outcome.best_min_degree + 1
                                           : 1)),
        BigInt(outcome.found ? outcome.best_min_degree : 0));
  }
  Hypergraph witness(n, k);
  for (std::uint64_t rank : outcome.best_edges) witness.insert_rank(rank);
  report.brute_force = BigInt(outcome.best_min_degree) + 1;
  report.witness = std::move(witness);
  return report;
}

ClosenessReport closeness(const Hypergraph& h, BarrierVariant variant) {
  if (h.n() > kClosenessEnumerationCap) {
    throw SizeCapError(
        "closeness enumerates balanced bipartitions and is capped at "
        "n <= 22; supply an explicit bipartition for larger instances");
  }
  if (h.k() > h.n()) {
    throw std::invalid_argument("closeness: k exceeds n");
  }
  const int half = h.n() / 2;
  bool have = false;
  ClosenessReport best;
  for_each_subset(h.n(), half, [&](VertexSet part_a, std::uint64_t) {
    const ClosenessReport candidate = closeness_fixed(h, variant, part_a);
    if (!have || candidate.distance < best.distance) {
      have = true;
      best = candidate;
    }
  });
  return best;
}

ClosenessReport closeness_fixed(const Hypergraph& h, BarrierVariant variant,
                                VertexSet part_a) {
  if (!VertexSet::full(h.n()).contains_all(part_a)) {
    throw std::invalid_argument("closeness: bipartition outside vertex set");
  }
  const int parity = variant == BarrierVariant::odd_intersection ? 1 : 0;
  std::uint64_t distance = 0;
  for_each_subset(h.n(), h.k(), [&](VertexSet e, std::uint64_t rank) {
    const bool in_target = ((e & part_a).size() & 1) == parity;
    if (in_target != h.contains_rank(rank)) ++distance;
  });
  ClosenessReport report;
  report.variant = variant;
  report.part_a = part_a;
  report.distance = BigInt(distance);
  report.epsilon = Rational(BigInt(distance), int_pow(BigInt(h.n()), h.k()));
  return report;
}

Rational cstar_space_lower(int k, int ell) {
  if (k < 2 || ell < 1 || ell >= k) {
    throw std::invalid_argument("cstar: need 1 <= ell <= k-1");
  }
  return 1 - rat_pow(Rational(k - 1, k), k - ell);
}

Rational cstar_upper_kot(int k, int ell) {
  if (k < 2 || ell < 1 || ell >= k) {
    throw std::invalid_argument("cstar: need 1 <= ell <= k-1");
  }
  if (ell == k - 1) return Rational(1, k);
  return Rational(k - ell, k) -
         Rational(k - ell - 1) / Rational(int_pow(BigInt(k), k - ell));
}

std::optional<Rational> cstar_known(int k, int ell) {
  if (k < 2 || ell < 1 || ell >= k) {
    throw std::invalid_argument("cstar: need 1 <= ell <= k-1");
  }
  if (ell >= k - 4) return cstar_space_lower(k, ell);
  return std::nullopt;
}

RegimeReport regime_compare(int k, int ell, int n) {
  RegimeReport report;
  report.delta_term = delta_threshold(n, k, ell).value;
  report.space_term = space_barrier_degree(n, k, ell);
  if (report.delta_term > report.space_term) {
    report.dominant = RegimeReport::Dominant::delta;
  } else if (report.delta_term < report.space_term) {
    report.dominant = RegimeReport::Dominant::space;
  } else {
    report.dominant = RegimeReport::Dominant::tie;
  }
  report.crossover_hint = Rational(306853, 1000000) * k;
  return report;
}

HypothesisReport check_hypotheses(const Hypergraph& h, int ell,
                                  int ell_prime, const Rational& theta) {
  if (theta <= 0) throw std::invalid_argument("theta must be positive");
  const int n = h.n();
  const int k = h.k();
  if (n % k != 0) {
    throw std::invalid_argument("check_hypotheses: k must divide n");
  }
  const std::optional<Rational> cstar = cstar_known(k, ell_prime);
  if (!cstar) {
    throw std::invalid_argument(
        "no confirmed fractional threshold for this (k, ell')");
  }
  HypothesisReport report;
  report.ell = ell;
  report.ell_prime = ell_prime;
  report.delta_ell = min_ell_degree(h, ell).degree;
  report.delta_threshold_value = delta_threshold(n, k, ell).value;
  report.degree_clause = report.delta_ell > report.delta_threshold_value;
  report.delta_ell_prime = min_ell_degree(h, ell_prime).degree;
  report.fractional_threshold =
      scaled_binom(*cstar + theta, n - ell_prime, k - ell_prime);
  report.fractional_clause =
      Rational(report.delta_ell_prime) > report.fractional_threshold;
  report.all_clauses = report.degree_clause && report.fractional_clause;
  report.perfect_matching = desk_scale_pm(h);
  report.consistent = !(report.all_clauses && report.perfect_matching &&
                        !*report.perfect_matching);
  return report;
}

DenseVertexReport check_dense_vertex_hypotheses(const Hypergraph& h, int ell,
                                                const Rational& delta_prime,
                                                const Rational& eps) {
  if (eps <= 0 || eps > delta_prime) {
    throw std::invalid_argument("need 0 < eps <= delta'");
  }
  const int n = h.n();
  const int k = h.k();
  const std::optional<Rational> cstar = cstar_known(k, ell);
  if (!cstar) {
    throw std::invalid_argument(
        "no confirmed fractional threshold for this (k, ell)");
  }
  DenseVertexReport report;
  report.delta_one = min_ell_degree(h, 1).degree;
  report.vertex_degree_threshold = scaled_binom(delta_prime, n - 1, k - 1);
  report.vertex_degree_clause =
      Rational(report.delta_one) >= report.vertex_degree_threshold;
  report.delta_ell = min_ell_degree(h, ell).degree;
  report.ell_degree_threshold = scaled_binom(*cstar + eps, n - ell, k - ell);
  report.ell_degree_clause =
      Rational(report.delta_ell) >= report.ell_degree_threshold;
  const Rational rich_degree =
      scaled_binom(1 - delta_prime + eps, n - 1, k - 1);
  int rich = 0;
  for (int v = 0; v < n; ++v) {
    if (Rational(degree_of_set(h, VertexSet{}.with(v))) >= rich_degree) {
      ++rich;
    }
  }
  report.rich_vertex_count = rich;
  report.rich_vertex_threshold = eps * n;
  report.rich_vertices_clause =
      Rational(report.rich_vertex_count) >= report.rich_vertex_threshold;
  report.all_clauses = report.vertex_degree_clause &&
                       report.ell_degree_clause &&
                       report.rich_vertices_clause;
  report.perfect_matching = desk_scale_pm(h);
  report.consistent = !(report.all_clauses && report.perfect_matching &&
                        !*report.perfect_matching);
  return report;
}

}  // namespace matchlab
