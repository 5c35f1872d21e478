#include "matchlab/simplex.hpp"

#include <stdexcept>

namespace matchlab {

// Tableau layout: one row per constraint over columns
// [structural 0..m) | slack m..m+n) | rhs], plus a cost row. The slack basis
// is feasible because b >= 0, so no phase-1 is needed. Entering column:
// least index with negative cost row entry; leaving row: minimum ratio with
// least basic-variable index on ties (Bland's rule, which precludes
// cycling and fixes the pivot sequence deterministically).
LpSolution solve_packing_lp(const LpProblem& problem) {
  const std::size_t rows = problem.rows.size();
  const std::size_t vars = problem.objective.size();
  if (problem.rhs.size() != rows) {
    throw std::invalid_argument("lp: rhs size mismatch");
  }
  for (const auto& row : problem.rows) {
    if (row.size() != vars) throw std::invalid_argument("lp: row size mismatch");
  }
  for (const auto& b : problem.rhs) {
    if (b < 0) throw std::invalid_argument("lp: negative rhs");
  }

  const std::size_t total = vars + rows;  // structural + slack
  std::vector<std::vector<Rational>> t(rows + 1,
                                       std::vector<Rational>(total + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = problem.rows[i][j];
    t[i][vars + i] = 1;
    t[i][total] = problem.rhs[i];
  }
  for (std::size_t j = 0; j < vars; ++j) t[rows][j] = -problem.objective[j];

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;

  LpSolution solution;
  for (;;) {
    std::size_t entering = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (t[rows][j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == total) break;  // optimal

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][entering] <= 0) continue;
      const Rational ratio = t[i][total] / t[i][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == rows) {
      throw std::runtime_error("lp: unbounded objective");
    }

    const Rational pivot = t[leaving][entering];
    for (std::size_t j = 0; j <= total; ++j) t[leaving][j] /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leaving || t[i][entering] == 0) continue;
      const Rational factor = t[i][entering];
      for (std::size_t j = 0; j <= total; ++j) {
        t[i][j] -= factor * t[leaving][j];
      }
    }
    basis[leaving] = entering;
    ++solution.pivots;
  }

  solution.x.assign(vars, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) solution.x[basis[i]] = t[i][total];
  }
  solution.y.assign(rows, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    solution.y[i] = t[rows][vars + i];  // reduced cost of slack i
  }
  solution.value = t[rows][total];
  return solution;
}

}  // namespace matchlab
