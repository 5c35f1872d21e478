#include "matchlab/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace matchlab {

namespace {

bool only_whitespace(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  std::istringstream header(line);
  long long n = -1, k = -1, m = -1;
  std::string extra;
  if (!(header >> n >> k >> m) || (header >> extra) || n < 0 || k < 0 ||
      m < 0) {
    throw ParseError(1, "malformed header, expected 'n k m'");
  }
  if (k < 2 || k > kMaxVertices || n < 0 || n > kMaxVertices) {
    throw ParseError(1, "header out of range: need 2 <= k <= 64, n <= 64");
  }
  Hypergraph h(static_cast<int>(n), static_cast<int>(k));
  for (long long i = 0; i < m; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    if (!std::getline(in, line)) {
      throw ParseError(line_no, "unexpected end of file, expected an edge");
    }
    std::istringstream row(line);
    VertexSet edge;
    int previous = -1;
    for (long long j = 0; j < k; ++j) {
      long long v;
      if (!(row >> v)) {
        throw ParseError(line_no, "wrong arity, expected " +
                                      std::to_string(k) + " vertices");
      }
      if (v < 0 || v >= n) {
        throw ParseError(line_no,
                         "vertex " + std::to_string(v) + " out of range");
      }
      if (static_cast<int>(v) <= previous) {
        throw ParseError(line_no, "vertices must be strictly ascending");
      }
      previous = static_cast<int>(v);
      edge = edge.with(previous);
    }
    if (row >> extra) {
      throw ParseError(line_no, "wrong arity, expected " +
                                    std::to_string(k) + " vertices");
    }
    if (h.contains(edge)) throw ParseError(line_no, "duplicate edge");
    h.insert(edge);
  }
  int line_no = static_cast<int>(m) + 2;
  while (std::getline(in, line)) {
    if (!only_whitespace(line)) {
      throw ParseError(line_no, "trailing content after edge list");
    }
    ++line_no;
  }
  return h;
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_hypergraph(in);
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << h.n() << ' ' << h.k() << ' ' << h.edge_count() << '\n';
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (int v : e.vertices()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for write");
  write_hypergraph(h, out);
}

}  // namespace matchlab
