#pragma once

#include <cstdint>
#include <vector>

#include "matchlab/numeric.hpp"

namespace matchlab {

// max c.x subject to A x <= b, x >= 0, solved by dense primal simplex over
// exact rationals with Bland's least-index anti-cycling rule. Requires
// b >= 0 so the slack basis is feasible, which holds for packing LPs.
// Pivoting is fully deterministic, so solutions are reproducible
// byte-for-byte.
struct LpProblem {
  std::vector<std::vector<Rational>> rows;  // one row per constraint
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
};

struct LpSolution {
  Rational value;
  std::vector<Rational> x;  // primal variable values
  std::vector<Rational> y;  // dual values, one per constraint
  std::uint64_t pivots = 0;
};

// Throws std::invalid_argument on shape mismatch or negative rhs, and
// std::runtime_error if the objective is unbounded (impossible for packing
// instances).
LpSolution solve_packing_lp(const LpProblem& problem);

}  // namespace matchlab
