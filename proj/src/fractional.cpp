#include "matchlab/fractional.hpp"

#include <stdexcept>

#include "matchlab/simplex.hpp"

namespace matchlab {

namespace {

// The certificate is re-derived from scratch after every solve: primal and
// dual feasibility plus exact equality of the two sizes. A violation means a
// solver defect, never an input problem.
void verify_certificate(const Hypergraph& h,
                        const std::vector<VertexSet>& edges,
                        const std::vector<Rational>& weights,
                        const std::vector<Rational>& cover,
                        const Rational& value) {
  Rational primal_size = 0;
  std::vector<Rational> vertex_load(static_cast<std::size_t>(h.n()),
                                    Rational(0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (weights[e] < 0 || weights[e] > 1) {
      throw std::runtime_error("fractional matching weight outside [0, 1]");
    }
    primal_size += weights[e];
    for (int v : edges[e].vertices()) vertex_load[v] += weights[e];
  }
  for (int v = 0; v < h.n(); ++v) {
    if (vertex_load[v] > 1) {
      throw std::runtime_error("fractional matching overloads a vertex");
    }
  }
  Rational dual_size = 0;
  for (int v = 0; v < h.n(); ++v) {
    if (cover[v] < 0) throw std::runtime_error("negative cover weight");
    dual_size += cover[v];
  }
  for (const VertexSet& e : edges) {
    Rational covered = 0;
    for (int v : e.vertices()) covered += cover[v];
    if (covered < 1) throw std::runtime_error("cover misses an edge");
  }
  if (primal_size > dual_size) {
    throw std::runtime_error("weak duality violated");
  }
  if (primal_size != value || dual_size != value) {
    throw std::runtime_error("strong duality certificate failed");
  }
}

}  // namespace

FractionalMatchingResult max_fractional_matching(const Hypergraph& h) {
  const std::vector<VertexSet> edges = h.edges();
  const std::vector<std::uint64_t> ranks = h.edge_ranks();

  FractionalMatchingResult result;
  if (edges.empty()) {
    result.value = 0;
    result.primal.size = 0;
    result.dual.size = 0;
    return result;
  }

  LpProblem lp;
  lp.objective.assign(edges.size(), Rational(1));
  lp.rhs.assign(static_cast<std::size_t>(h.n()), Rational(1));
  lp.rows.assign(static_cast<std::size_t>(h.n()),
                 std::vector<Rational>(edges.size(), Rational(0)));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (int v : edges[e].vertices()) lp.rows[v][e] = 1;
  }

  const LpSolution solution = solve_packing_lp(lp);
  verify_certificate(h, edges, solution.x, solution.y, solution.value);

  result.value = solution.value;
  result.primal.size = solution.value;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (solution.x[e] != 0) {
      result.primal.weights.emplace_back(ranks[e], solution.x[e]);
    }
  }
  result.dual.size = solution.value;
  for (int v = 0; v < h.n(); ++v) {
    if (solution.y[v] != 0) {
      result.dual.weights.emplace_back(v, solution.y[v]);
    }
  }
  return result;
}

bool has_perfect_fractional_matching(const Hypergraph& h) {
  return max_fractional_matching(h).value == Rational(h.n(), h.k());
}

}  // namespace matchlab
