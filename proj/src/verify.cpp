#include "matchlab/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "matchlab/analysis.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/fractional.hpp"
#include "matchlab/hypergraph.hpp"
#include "matchlab/matching.hpp"

namespace matchlab {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool passed,
         const std::string& detail = "") {
  out.push_back({name, passed, detail});
}

void suite_core(std::vector<CheckResult>& out) {
  bool handshake = true;
  bool involution = true;
  bool induced_identity = true;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Hypergraph h = Hypergraph::random(9, 3, Rational(1, 2), seed);
    BigInt degree_sum = 0;
    for (int v = 0; v < h.n(); ++v) {
      degree_sum += degree_of_set(h, VertexSet{}.with(v));
    }
    handshake &= degree_sum == BigInt(h.k()) * h.edge_count();
    involution &= complement(complement(h)) == h;
    induced_identity &= induced(h, VertexSet::full(h.n())) == h;
  }
  add(out, "vertex degrees sum to k times the edge count", handshake);
  add(out, "complement is an involution", involution);
  add(out, "inducing on the full vertex set is the identity",
      induced_identity);

  bool roundtrip = true;
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= 4 && k <= n; ++k) {
      for (std::uint64_t r = 0; r < binom_u64(n, k); ++r) {
        roundtrip &= rank_colex(unrank_colex(r, k, n), k) == r;
      }
    }
  }
  add(out, "subset rank and unrank invert each other", roundtrip);
}

void suite_parity(std::vector<CheckResult>& out) {
  bool closure = true;
  for (int a = 0; a <= 20 && closure; ++a) {
    for (int b = 0; b <= 20 && closure; ++b) {
      for (int r = 0; r <= 8; ++r) {
        if (parity_sum(a, b, r, Parity::even) +
                parity_sum(a, b, r, Parity::odd) !=
            binom(a + b, r)) {
          closure = false;
          break;
        }
      }
    }
  }
  add(out, "parity sums split the Vandermonde identity", closure);
}

void suite_barrier_degrees(std::vector<CheckResult>& out) {
  bool agree = true;
  std::ostringstream detail;
  for (int k = 2; k <= 3; ++k) {
    for (int n = k; n <= 10; ++n) {
      for (int a = 0; a <= n; ++a) {
        for (BarrierVariant variant : {BarrierVariant::odd_intersection,
                                       BarrierVariant::even_intersection}) {
          const BarrierSpec spec{n, k, a, variant};
          const Hypergraph h = build_barrier(spec);
          for (int ell = 1; ell < k; ++ell) {
            if (barrier_min_degree_closed_form(spec, ell) !=
                min_ell_degree(h, ell).degree) {
              agree = false;
              detail << "mismatch at n=" << n << " k=" << k << " a=" << a
                     << " " << variant_name(variant) << " ell=" << ell;
            }
          }
        }
      }
    }
  }
  add(out, "closed-form barrier degrees match enumeration", agree,
      detail.str());
}

void suite_pm_free(std::vector<CheckResult>& out) {
  bool family_free = true;
  for (int n : {6, 9}) {
    for (const ExtFamilyMember& member : ext_family(n, 3)) {
      family_free &= !has_perfect_matching(build_barrier(member.spec)).exists;
    }
  }
  for (int n : {6, 8}) {
    for (const ExtFamilyMember& member : ext_family(n, 2)) {
      family_free &= !has_perfect_matching(build_barrier(member.spec)).exists;
    }
  }
  add(out, "barrier family members have no perfect matching", family_free);

  bool space_free = true;
  for (int n : {6, 9}) {
    space_free &= !has_perfect_matching(space_barrier(n, 3)).exists;
  }
  add(out, "space barriers have no perfect matching", space_free);
}

void suite_duality(std::vector<CheckResult>& out) {
  bool certified = true;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Hypergraph h = Hypergraph::random(9, 3, Rational(3, 5), seed);
    const FractionalMatchingResult r = max_fractional_matching(h);
    certified &= r.primal.size == r.dual.size && r.value == r.primal.size;
  }
  add(out, "fractional optima carry matching primal and dual sizes",
      certified);
  add(out, "space barrier fractional optimum equals n/k - 1",
      max_fractional_matching(space_barrier(6, 3)).value == Rational(1));
}

void suite_absorbing(std::vector<CheckResult>& out) {
  const Hypergraph h = Hypergraph::random(10, 3, Rational(4, 5), 7);
  bool positive = true;
  bool certified = true;
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      const BigInt count = absorbing_set_count(h, x, y);
      positive &= count > 0;
      // Extract a certificate from the first counted set: a perfect
      // matching of H[X + {x}] minus its x-edge absorbs the rest of X
      // together with y.
      const std::vector<int> free =
          (VertexSet::full(h.n()).without(x).without(y)).vertices();
      bool done = false;
      for_each_subset(static_cast<int>(free.size()), 2 * h.k() - 1,
                      [&](VertexSet pick, std::uint64_t) {
                        if (done) return;
                        VertexSet x_set;
                        for (int i : pick.vertices()) {
                          x_set = x_set.with(free[i]);
                        }
                        const auto pm_x =
                            perfect_matching_on(h, x_set.with(x));
                        const auto pm_y =
                            perfect_matching_on(h, x_set.with(y));
                        if (!pm_x || !pm_y) return;
                        done = true;
                        std::vector<std::uint64_t> keep;
                        for (std::uint64_t rank : *pm_x) {
                          if (!unrank_colex(rank, h.k(), h.n()).contains(x)) {
                            keep.push_back(rank);
                          }
                        }
                        const Matching m = Matching::from_ranks(h, keep);
                        const VertexSet w =
                            (x_set - m.support()).with(y);
                        certified &= is_absorbing(h, m, w);
                      });
      positive &= done;
    }
  }
  add(out, "absorbing sets exist for sampled pairs", positive);
  add(out, "counted absorbing sets certify absorption", certified);
}

void suite_hypotheses(std::vector<CheckResult>& out) {
  const HypothesisReport complete =
      check_hypotheses(Hypergraph::complete(6, 3), 1, 1, Rational(1, 100));
  add(out, "complete hypergraph meets both degree hypotheses",
      complete.all_clauses && complete.perfect_matching &&
          *complete.perfect_matching);
  const HypothesisReport space =
      check_hypotheses(space_barrier(6, 3), 1, 1, Rational(1, 100));
  add(out, "space barrier misses the barrier-family degree hypothesis",
      !space.degree_clause);
  const HypothesisReport barrier = check_hypotheses(
      build_barrier({6, 3, 3, BarrierVariant::even_intersection}), 1, 1,
      Rational(1, 100));
  add(out, "balanced barrier misses the degree hypothesis and a matching",
      !barrier.degree_clause && barrier.perfect_matching &&
          !*barrier.perfect_matching);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"core",    "parity",    "barrier-degrees", "pm-free",
          "duality", "absorbing", "hypotheses",      "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  bool known = false;
  const auto want = [&](const char* name) {
    const bool match = suite == name || suite == "all";
    known |= suite == name;
    return match;
  };
  if (want("core")) suite_core(out);
  if (want("parity")) suite_parity(out);
  if (want("barrier-degrees")) suite_barrier_degrees(out);
  if (want("pm-free")) suite_pm_free(out);
  if (want("duality")) suite_duality(out);
  if (want("absorbing")) suite_absorbing(out);
  if (want("hypotheses")) suite_hypotheses(out);
  if (!known && suite != "all") {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  return out;
}

}  // namespace matchlab
