#include "matchlab/json_io.hpp"

#include <sstream>

namespace matchlab {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) { return to_string(r); }
json count_json(const BigInt& n) { return to_string(n); }

}  // namespace

json vertex_list_json(VertexSet s) {
  json out = json::array();
  for (int v : s.vertices()) out.push_back(v);
  return out;
}

json edge_list_json(const Hypergraph& h) {
  json out = json::array();
  for (VertexSet e : h.edges()) out.push_back(vertex_list_json(e));
  return out;
}

json degree_report_json(const Hypergraph& h, int ell,
                        const MinDegree& result) {
  return json{{"degree", count_json(result.degree)},
              {"ell", ell},
              {"k", h.k()},
              {"n", h.n()},
              {"witness", vertex_list_json(result.witness)}};
}

json match_report_json(const Hypergraph& h,
                       const PerfectMatchingResult& result) {
  json witness;
  if (result.witness) {
    witness = json::array();
    for (VertexSet e : result.witness->edges()) {
      witness.push_back(vertex_list_json(e));
    }
  } else {
    witness = nullptr;
  }
  return json{{"k", h.k()},
              {"n", h.n()},
              {"perfect", result.exists},
              {"witness", witness}};
}

json fractional_report_json(const Hypergraph& h,
                            const FractionalMatchingResult& result) {
  json weights = json::array();
  for (const auto& [rank, weight] : result.primal.weights) {
    weights.push_back(json::array({rank, rational_json(weight)}));
  }
  json cover = json::array();
  for (const auto& [vertex, weight] : result.dual.weights) {
    cover.push_back(json::array({vertex, rational_json(weight)}));
  }
  return json{{"cover", cover},
              {"k", h.k()},
              {"n", h.n()},
              {"value", rational_json(result.value)},
              {"weights", weights}};
}

namespace {

json overlap_json(const OverlapStats& stats) {
  return json{{"commonNeighbors", count_json(stats.common_neighbors)},
              {"commonNonNeighbors", count_json(stats.common_non_neighbors)},
              {"goodLinkVertices", stats.good_link_vertices}};
}

}  // namespace

json absorb_report_json(const Hypergraph& h, int x, int y,
                        const Rational& gamma, const OverlapStats& stats,
                        const BigInt& count, const BigInt& examined) {
  return json{{"count", count_json(count)},
              {"gamma", rational_json(gamma)},
              {"k", h.k()},
              {"n", h.n()},
              {"nExamined", count_json(examined)},
              {"overlap", overlap_json(stats)},
              {"sampled", false},
              {"x", x},
              {"y", y}};
}

json absorb_sample_report_json(const Hypergraph& h, int x, int y,
                               const Rational& gamma,
                               const OverlapStats& stats,
                               const AbsorbingSample& sample,
                               std::uint64_t seed) {
  return json{{"estimate", rational_json(sample.estimate)},
              {"gamma", rational_json(gamma)},
              {"hits", sample.hits},
              {"k", h.k()},
              {"n", h.n()},
              {"overlap", overlap_json(stats)},
              {"sampled", true},
              {"samples", sample.samples},
              {"seed", seed},
              {"x", x},
              {"y", y}};
}

json closeness_report_json(const Hypergraph& h,
                           const ClosenessReport& report) {
  return json{{"distance", count_json(report.distance)},
              {"epsilon", rational_json(report.epsilon)},
              {"k", h.k()},
              {"n", h.n()},
              {"partition", vertex_list_json(report.part_a)},
              {"variant", variant_name(report.variant)}};
}

json threshold_report_json(const ThresholdReport& report) {
  json out{{"conjectured", count_json(report.conjectured)},
           {"delta", count_json(report.delta)},
           {"ell", report.ell},
           {"k", report.k},
           {"n", report.n},
           {"notes", report.notes},
           {"space", count_json(report.space)}};
  if (report.brute_force) {
    out["bruteForce"] = count_json(*report.brute_force);
  }
  if (report.witness) {
    out["witnessEdges"] = edge_list_json(*report.witness);
  }
  return out;
}

std::string threshold_report_csv_header() {
  return "k,ell,n,delta,space,conjectured,bruteForce";
}

std::string threshold_report_csv_row(const ThresholdReport& report) {
  std::ostringstream row;
  row << report.k << ',' << report.ell << ',' << report.n << ','
      << to_string(report.delta) << ',' << to_string(report.space) << ','
      << to_string(report.conjectured) << ',';
  if (report.brute_force) row << to_string(*report.brute_force);
  return row.str();
}

json bounds_report_json(int k, int ell) {
  const std::optional<Rational> known = cstar_known(k, ell);
  return json{{"ell", ell},
              {"k", k},
              {"known", known ? json(rational_json(*known)) : json(nullptr)},
              {"lower", rational_json(cstar_space_lower(k, ell))},
              {"upper", rational_json(cstar_upper_kot(k, ell))}};
}

json verify_report_json(const std::string& suite,
                        const std::vector<CheckResult>& checks) {
  json entries = json::array();
  bool all = true;
  for (const CheckResult& check : checks) {
    all &= check.passed;
    entries.push_back(json{{"detail", check.detail},
                           {"name", check.name},
                           {"passed", check.passed}});
  }
  return json{{"checks", entries}, {"passed", all}, {"suite", suite}};
}

}  // namespace matchlab
