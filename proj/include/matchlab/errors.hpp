#pragma once

#include <stdexcept>
#include <string>

#include "matchlab/numeric.hpp"

namespace matchlab {

// Raised when an input exceeds one of the documented enumeration caps
// (absorbing counts n <= 14, closeness bipartition search n <= 22, the
// brute-force threshold grid, C(n,k) storage cap).
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exhaustive search runs out of its node budget. Carries the
// best bound proved before stopping: the search saw a matching-free
// hypergraph of minimum ell-degree best_min_degree, so the threshold is at
// least best_min_degree + 1.
class BudgetExhaustedError : public std::runtime_error {
 public:
  BudgetExhaustedError(const std::string& what, BigInt best_min_degree)
      : std::runtime_error(what),
        best_min_degree(std::move(best_min_degree)) {}

  BigInt best_min_degree;
};

}  // namespace matchlab
