#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matchlab/hypergraph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

// Edge weights in [0,1] with total at most 1 at every vertex; size is the
// exact weight sum. Only edges with nonzero weight are listed.
struct FractionalMatching {
  std::vector<std::pair<std::uint64_t, Rational>> weights;  // (rank, weight)
  Rational size;
};

// Nonnegative vertex weights with total at least 1 on every edge; the LP
// dual of the fractional matching. Only vertices with nonzero weight are
// listed.
struct FractionalCover {
  std::vector<std::pair<int, Rational>> weights;  // (vertex, weight)
  Rational size;
};

struct FractionalMatchingResult {
  Rational value;  // nu*(H), the LP optimum
  FractionalMatching primal;
  FractionalCover dual;
};

// Maximum fractional matching with a matching-size minimum fractional vertex
// cover as an optimality certificate. Both feasibility and the exact
// equality of the two sizes are verified on every solve before returning.
FractionalMatchingResult max_fractional_matching(const Hypergraph& h);

// True iff nu*(H) equals n/k exactly.
bool has_perfect_fractional_matching(const Hypergraph& h);

}  // namespace matchlab
