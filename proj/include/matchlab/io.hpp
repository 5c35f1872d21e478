#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "matchlab/hypergraph.hpp"

namespace matchlab {

// Text format: a header line "n k m" followed by m edge lines, each holding
// k space-separated 0-based vertex labels in strictly ascending order.
// Duplicate edges are rejected. Written output lists edges in ascending
// colex rank, so write/read round-trips are byte-stable.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}

  int line;
};

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

void write_hypergraph(const Hypergraph& h, std::ostream& out);
void write_hypergraph_file(const Hypergraph& h, const std::string& path);

}  // namespace matchlab
