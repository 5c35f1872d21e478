// matchlab: exact computations on perfect matchings in k-uniform
// hypergraphs. Subcommands construct instances, compute degrees and
// matchings (integral and fractional), count absorbing configurations,
// measure barrier closeness, and tabulate degree thresholds.
//
// Exit codes: 0 success, 1 malformed input, 2 infeasible size cap or
// exhausted search budget, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matchlab/analysis.hpp"
#include "matchlab/errors.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/fractional.hpp"
#include "matchlab/io.hpp"
#include "matchlab/json_io.hpp"
#include "matchlab/matching.hpp"
#include "matchlab/verify.hpp"

namespace {

using matchlab::BarrierVariant;
using matchlab::Rational;
using nlohmann::json;

void emit(const json& value) { std::cout << value.dump(2) << '\n'; }

BarrierVariant parse_variant(const std::string& name) {
  if (name == "odd") return BarrierVariant::odd_intersection;
  if (name == "even") return BarrierVariant::even_intersection;
  throw std::invalid_argument("variant must be 'odd' or 'even'");
}

matchlab::VertexSet parse_vertex_list(const std::string& text) {
  matchlab::VertexSet out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    out = out.with(std::stoi(token));
  }
  return out;
}

std::string join_vertices(matchlab::VertexSet s) {
  std::string out;
  for (int v : s.vertices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

struct Options {
  bool json = false;
  bool csv = false;

  // construct
  int n = 0, k = 0, a = 0;
  std::string variant = "even";
  std::string probability = "1/2";
  std::uint64_t seed = 0;
  std::string out_path;

  // instance subcommands
  std::string file;
  int ell = 1;
  int x = 0, y = 1;
  std::string gamma = "1/20";
  std::uint64_t samples = 0;
  std::string part;

  // threshold
  int n_max = 0;
  bool brute = false;
  std::uint64_t budget = matchlab::kDefaultSearchBudget;

  std::string suite = "all";
};

int run_construct_barrier(const Options& opt) {
  const matchlab::BarrierSpec spec{opt.n, opt.k, opt.a,
                                   parse_variant(opt.variant)};
  const matchlab::Hypergraph h = matchlab::build_barrier(spec);
  matchlab::write_hypergraph_file(h, opt.out_path);
  if (opt.json) {
    emit(json{{"a", opt.a},
              {"edges", h.edge_count()},
              {"k", opt.k},
              {"kind", "barrier"},
              {"n", opt.n},
              {"variant", opt.variant}});
  } else {
    std::cout << "barrier " << opt.n << ' ' << opt.k << ' ' << opt.a << ' '
              << opt.variant << ": " << h.edge_count() << " edges\n";
  }
  return 0;
}

int run_construct_space(const Options& opt) {
  const matchlab::Hypergraph h = matchlab::space_barrier(opt.n, opt.k);
  matchlab::write_hypergraph_file(h, opt.out_path);
  if (opt.json) {
    emit(json{{"edges", h.edge_count()},
              {"k", opt.k},
              {"kind", "space"},
              {"n", opt.n}});
  } else {
    std::cout << "space barrier " << opt.n << ' ' << opt.k << ": "
              << h.edge_count() << " edges\n";
  }
  return 0;
}

int run_construct_random(const Options& opt) {
  const Rational p = matchlab::parse_rational(opt.probability);
  const matchlab::Hypergraph h =
      matchlab::Hypergraph::random(opt.n, opt.k, p, opt.seed);
  matchlab::write_hypergraph_file(h, opt.out_path);
  if (opt.json) {
    emit(json{{"edges", h.edge_count()},
              {"k", opt.k},
              {"kind", "random"},
              {"n", opt.n},
              {"p", matchlab::to_string(p)},
              {"seed", opt.seed}});
  } else {
    std::cout << "random " << opt.n << ' ' << opt.k << " p="
              << matchlab::to_string(p) << " seed=" << opt.seed << ": "
              << h.edge_count() << " edges\n";
  }
  return 0;
}

int run_degree(const Options& opt) {
  const matchlab::Hypergraph h = matchlab::read_hypergraph_file(opt.file);
  const matchlab::MinDegree result = matchlab::min_ell_degree(h, opt.ell);
  if (opt.json) {
    emit(matchlab::degree_report_json(h, opt.ell, result));
  } else {
    std::cout << "min " << opt.ell << "-degree: "
              << matchlab::to_string(result.degree) << "\nwitness: "
              << join_vertices(result.witness) << '\n';
  }
  return 0;
}

int run_match(const Options& opt) {
  const matchlab::Hypergraph h = matchlab::read_hypergraph_file(opt.file);
  const matchlab::PerfectMatchingResult result =
      matchlab::has_perfect_matching(h);
  if (opt.json) {
    emit(matchlab::match_report_json(h, result));
  } else if (result.exists) {
    std::cout << "perfect matching: yes\n";
    for (matchlab::VertexSet e : result.witness->edges()) {
      std::cout << join_vertices(e) << '\n';
    }
  } else {
    std::cout << "perfect matching: no\n";
  }
  return 0;
}

int run_fracmatch(const Options& opt) {
  const matchlab::Hypergraph h = matchlab::read_hypergraph_file(opt.file);
  const matchlab::FractionalMatchingResult result =
      matchlab::max_fractional_matching(h);
  if (opt.json) {
    emit(matchlab::fractional_report_json(h, result));
  } else {
    std::cout << "value: " << matchlab::to_string(result.value) << '\n';
    for (const auto& [rank, weight] : result.primal.weights) {
      std::cout << "weight[" << rank
                << "] = " << matchlab::to_string(weight) << '\n';
    }
    for (const auto& [vertex, weight] : result.dual.weights) {
      std::cout << "cover[" << vertex
                << "] = " << matchlab::to_string(weight) << '\n';
    }
  }
  return 0;
}

int run_absorb(const Options& opt) {
  const matchlab::Hypergraph h = matchlab::read_hypergraph_file(opt.file);
  const Rational gamma = matchlab::parse_rational(opt.gamma);
  const matchlab::OverlapStats stats =
      matchlab::overlap_stats(h, opt.x, opt.y, gamma);
  if (opt.samples > 0) {
    const matchlab::AbsorbingSample sample =
        matchlab::absorbing_set_count_sampled(h, opt.x, opt.y, opt.samples,
                                              opt.seed);
    if (opt.json) {
      emit(matchlab::absorb_sample_report_json(h, opt.x, opt.y, gamma, stats,
                                               sample, opt.seed));
    } else {
      std::cout << "common neighbors: "
                << matchlab::to_string(stats.common_neighbors)
                << "\ncommon non-neighbors: "
                << matchlab::to_string(stats.common_non_neighbors)
                << "\ngood link vertices: " << stats.good_link_vertices
                << "\nabsorbing-set estimate: "
                << matchlab::to_string(sample.estimate) << " (" << sample.hits
                << " hits in " << sample.samples << " samples)\n";
    }
    return 0;
  }
  const matchlab::BigInt count =
      matchlab::absorbing_set_count(h, opt.x, opt.y);
  const matchlab::BigInt examined =
      matchlab::binom(h.n() - 2, 2 * h.k() - 1);
  if (opt.json) {
    emit(matchlab::absorb_report_json(h, opt.x, opt.y, gamma, stats, count,
                                      examined));
  } else {
    std::cout << "common neighbors: "
              << matchlab::to_string(stats.common_neighbors)
              << "\ncommon non-neighbors: "
              << matchlab::to_string(stats.common_non_neighbors)
              << "\ngood link vertices: " << stats.good_link_vertices
              << "\nabsorbing sets: " << matchlab::to_string(count) << " of "
              << matchlab::to_string(examined) << " examined\n";
  }
  return 0;
}

int run_closeness(const Options& opt) {
  const matchlab::Hypergraph h = matchlab::read_hypergraph_file(opt.file);
  const BarrierVariant variant = parse_variant(opt.variant);
  const matchlab::ClosenessReport report =
      opt.part.empty()
          ? matchlab::closeness(h, variant)
          : matchlab::closeness_fixed(h, variant,
                                      parse_vertex_list(opt.part));
  if (opt.json) {
    emit(matchlab::closeness_report_json(h, report));
  } else {
    std::cout << "distance: " << matchlab::to_string(report.distance)
              << "\nepsilon: " << matchlab::to_string(report.epsilon)
              << "\npartition: " << join_vertices(report.part_a) << '\n';
  }
  return 0;
}

int run_threshold(const Options& opt) {
  const int n_hi = opt.n_max > 0 ? opt.n_max : opt.n;
  std::vector<matchlab::ThresholdReport> reports;
  for (int n = opt.n; n <= n_hi; n += opt.k) {
    reports.push_back(opt.brute
                          ? matchlab::brute_force_threshold(opt.k, opt.ell,
                                                            n, opt.budget)
                          : matchlab::threshold_report(opt.k, opt.ell, n));
  }
  if (opt.csv) {
    std::cout << matchlab::threshold_report_csv_header() << '\n';
    for (const auto& report : reports) {
      std::cout << matchlab::threshold_report_csv_row(report) << '\n';
    }
  } else if (opt.json) {
    if (reports.size() == 1) {
      emit(matchlab::threshold_report_json(reports.front()));
    } else {
      json rows = json::array();
      for (const auto& report : reports) {
        rows.push_back(matchlab::threshold_report_json(report));
      }
      emit(rows);
    }
  } else {
    for (const auto& report : reports) {
      std::cout << "k=" << report.k << " ell=" << report.ell
                << " n=" << report.n
                << ": delta=" << matchlab::to_string(report.delta)
                << " space=" << matchlab::to_string(report.space)
                << " conjectured="
                << matchlab::to_string(report.conjectured);
      if (report.brute_force) {
        std::cout << " brute=" << matchlab::to_string(*report.brute_force);
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int run_bounds(const Options& opt) {
  if (opt.json) {
    emit(matchlab::bounds_report_json(opt.k, opt.ell));
  } else {
    const auto known = matchlab::cstar_known(opt.k, opt.ell);
    std::cout << "lower: "
              << matchlab::to_string(
                     matchlab::cstar_space_lower(opt.k, opt.ell))
              << "\nupper: "
              << matchlab::to_string(
                     matchlab::cstar_upper_kot(opt.k, opt.ell))
              << "\nknown: "
              << (known ? matchlab::to_string(*known) : "unconfirmed")
              << '\n';
  }
  return 0;
}

int run_verify(const Options& opt) {
  const std::vector<matchlab::CheckResult> checks =
      matchlab::run_verify_suite(opt.suite);
  bool all = true;
  for (const auto& check : checks) all &= check.passed;
  if (opt.json) {
    emit(matchlab::verify_report_json(opt.suite, checks));
  } else {
    for (const auto& check : checks) {
      std::cout << (check.passed ? "[pass] " : "[FAIL] ") << check.name;
      if (!check.passed && !check.detail.empty()) {
        std::cout << " (" << check.detail << ')';
      }
      std::cout << '\n';
    }
    std::cout << (all ? "all checks passed" : "checks FAILED") << '\n';
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact perfect-matching laboratory for uniform hypergraphs"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* construct =
      app.add_subcommand("construct", "build and write a hypergraph file");
  construct->require_subcommand(1);
  CLI::App* barrier = construct->add_subcommand(
      "barrier", "parity barrier; args: n k a odd|even");
  barrier->add_option("n", opt.n)->required();
  barrier->add_option("k", opt.k)->required();
  barrier->add_option("a", opt.a)->required();
  barrier->add_option("variant", opt.variant)->required();
  CLI::App* space =
      construct->add_subcommand("space", "space barrier; args: n k");
  space->add_option("n", opt.n)->required();
  space->add_option("k", opt.k)->required();
  CLI::App* random = construct->add_subcommand(
      "random", "binomial random hypergraph; args: n k p");
  random->add_option("n", opt.n)->required();
  random->add_option("k", opt.k)->required();
  random->add_option("p", opt.probability)->required();
  random->add_option("--seed", opt.seed, "RNG seed")->required();
  for (CLI::App* sub : {barrier, space, random}) {
    sub->add_option("--out", opt.out_path, "output file")->required();
    sub->add_flag("--json", opt.json, "JSON summary");
  }

  CLI::App* degree =
      app.add_subcommand("degree", "minimum ell-degree with witness");
  degree->add_option("file", opt.file)->required();
  degree->add_option("--ell", opt.ell)->required();

  CLI::App* match =
      app.add_subcommand("match", "perfect-matching decision with witness");
  match->add_option("file", opt.file)->required();

  CLI::App* fracmatch = app.add_subcommand(
      "fracmatch", "maximum fractional matching with dual cover");
  fracmatch->add_option("file", opt.file)->required();

  CLI::App* absorb = app.add_subcommand(
      "absorb", "overlap statistics and absorbing-set counts for a pair");
  absorb->add_option("file", opt.file)->required();
  absorb->add_option("--x", opt.x)->required();
  absorb->add_option("--y", opt.y)->required();
  absorb->add_option("--gamma", opt.gamma, "link threshold (default 1/20)");
  CLI::Option* sample_opt = absorb->add_option(
      "--sample", opt.samples, "sample size for the estimate");
  CLI::Option* seed_opt =
      absorb->add_option("--seed", opt.seed, "RNG seed");
  sample_opt->needs(seed_opt);
  seed_opt->needs(sample_opt);

  CLI::App* close = app.add_subcommand(
      "closeness", "edit distance to the nearest balanced barrier");
  close->add_option("file", opt.file)->required();
  close->add_option("--variant", opt.variant, "odd or even")->required();
  close->add_option("--part", opt.part,
                    "fixed bipartition class A, e.g. 0,1,2");

  CLI::App* threshold =
      app.add_subcommand("threshold", "degree-threshold report");
  threshold->add_option("--k", opt.k)->required();
  threshold->add_option("--ell", opt.ell)->required();
  threshold->add_option("--n", opt.n)->required();
  threshold->add_option("--n-max", opt.n_max, "tabulate n..n-max step k");
  threshold->add_flag("--brute", opt.brute, "run the exhaustive search");
  threshold->add_option("--budget", opt.budget, "search node budget");
  threshold->add_flag("--csv", opt.csv, "CSV table output");

  CLI::App* bounds =
      app.add_subcommand("bounds", "fractional-threshold bounds");
  bounds->add_option("--k", opt.k)->required();
  bounds->add_option("--ell", opt.ell)->required();

  CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", opt.suite, "suite name (default: all)");

  for (CLI::App* sub : {degree, match, fracmatch, absorb, close, threshold,
                        bounds, verify}) {
    sub->add_flag("--json", opt.json, "JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (barrier->parsed()) return run_construct_barrier(opt);
    if (space->parsed()) return run_construct_space(opt);
    if (random->parsed()) return run_construct_random(opt);
    if (degree->parsed()) return run_degree(opt);
    if (match->parsed()) return run_match(opt);
    if (fracmatch->parsed()) return run_fracmatch(opt);
    if (absorb->parsed()) return run_absorb(opt);
    if (close->parsed()) return run_closeness(opt);
    if (threshold->parsed()) return run_threshold(opt);
    if (bounds->parsed()) return run_bounds(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const matchlab::BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const matchlab::SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
