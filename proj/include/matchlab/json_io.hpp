#pragma once

#include <json.hpp>

#include "matchlab/analysis.hpp"
#include "matchlab/fractional.hpp"
#include "matchlab/hypergraph.hpp"
#include "matchlab/matching.hpp"
#include "matchlab/verify.hpp"

namespace matchlab {

// JSON report shapes shared by the CLI and the tests. Counts render as
// decimal strings, rationals as "p/q" (or "p" for integers); keys are
// emitted in sorted order so identical inputs give identical bytes.

nlohmann::json edge_list_json(const Hypergraph& h);
nlohmann::json vertex_list_json(VertexSet s);

nlohmann::json degree_report_json(const Hypergraph& h, int ell,
                                  const MinDegree& result);
nlohmann::json match_report_json(const Hypergraph& h,
                                 const PerfectMatchingResult& result);
nlohmann::json fractional_report_json(const Hypergraph& h,
                                      const FractionalMatchingResult& result);
nlohmann::json absorb_report_json(const Hypergraph& h, int x, int y,
                                  const Rational& gamma,
                                  const OverlapStats& stats,
                                  const BigInt& count,
                                  const BigInt& examined);
nlohmann::json absorb_sample_report_json(const Hypergraph& h, int x, int y,
                                         const Rational& gamma,
                                         const OverlapStats& stats,
                                         const AbsorbingSample& sample,
                                         std::uint64_t seed);
nlohmann::json closeness_report_json(const Hypergraph& h,
                                     const ClosenessReport& report);
nlohmann::json threshold_report_json(const ThresholdReport& report);
std::string threshold_report_csv_header();
std::string threshold_report_csv_row(const ThresholdReport& report);
nlohmann::json bounds_report_json(int k, int ell);
nlohmann::json verify_report_json(const std::string& suite,
                                  const std::vector<CheckResult>& checks);

}  // namespace matchlab
