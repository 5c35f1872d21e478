#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the command-line tool: golden JSON outputs, the text
// hypergraph format on disk, exit codes, and run-to-run determinism.

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = std::string(WORK_DIR) + "/cli_stdout.txt";
  const std::string err_path = std::string(WORK_DIR) + "/cli_stderr.txt";
  const std::string command = std::string(MATCHLAB_BIN) + " " + args + " > " +
                              out_path + " 2> " + err_path;
  const int raw = std::system(command.c_str());
  RunResult result;
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::string work_file(const std::string& name) {
  return std::string(WORK_DIR) + "/" + name;
}

void check_against_golden(const std::string& name, const std::string& got) {
  const std::string golden_path = std::string(GOLDEN_DIR) + "/" + name;
  const std::string want = slurp(golden_path);
  REQUIRE_MESSAGE(!want.empty(), "missing golden file ", golden_path);
  CHECK_MESSAGE(got == want, "output differs from ", golden_path, ":\n",
                got);
}

}  // namespace

TEST_CASE("construct writes the documented text format") {
  const std::string path = work_file("tri.hg");
  const RunResult r =
      run_cli("construct barrier 6 2 3 even --out " + path);
  REQUIRE(r.status == 0);
  CHECK(slurp(path) == "6 2 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n");
}

TEST_CASE("json outputs match the goldens") {
  const std::string tri = work_file("tri.hg");
  const std::string sp63 = work_file("sp63.hg");
  REQUIRE(run_cli("construct barrier 6 2 3 even --out " + tri).status == 0);
  REQUIRE(run_cli("construct space 6 3 --out " + sp63).status == 0);

  check_against_golden(
      "construct_barrier.json",
      run_cli("construct barrier 6 2 3 even --json --out " + tri).out);
  check_against_golden("degree_space63.json",
                       run_cli("degree " + sp63 + " --ell 1 --json").out);
  check_against_golden("match_tri.json",
                       run_cli("match " + tri + " --json").out);
  check_against_golden("fracmatch_space63.json",
                       run_cli("fracmatch " + sp63 + " --json").out);
  check_against_golden("absorb_complete83.json", [&] {
    const std::string k83 = work_file("k83.hg");
    REQUIRE(run_cli("construct random 8 3 1 --seed 1 --out " + k83).status ==
            0);
    return run_cli("absorb " + k83 + " --x 0 --y 1 --json").out;
  }());
  check_against_golden("closeness_b83.json", [&] {
    const std::string b83 = work_file("b83.hg");
    REQUIRE(run_cli("construct barrier 8 3 4 odd --out " + b83).status == 0);
    return run_cli("closeness " + b83 + " --variant odd --json").out;
  }());
  check_against_golden("threshold_216.json",
                       run_cli("threshold --k 2 --ell 1 --n 6 --brute --json")
                           .out);
  check_against_golden("bounds_52.json",
                       run_cli("bounds --k 5 --ell 2 --json").out);
}

TEST_CASE("threshold emits CSV tables") {
  const RunResult r =
      run_cli("threshold --k 3 --ell 1 --n 6 --n-max 12 --csv");
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "k,ell,n,delta,space,conjectured,bruteForce\n"
        "3,1,6,4,4,5,\n"
        "3,1,9,13,13,14,\n"
        "3,1,12,27,27,28,\n");
}

TEST_CASE("exit codes distinguish input, cap and verification failures") {
  const std::string bad = work_file("bad.hg");
  std::ofstream(bad) << "6 3 1\n0 1 9\n";
  CHECK(run_cli("match " + bad).status == 1);

  const std::string dup = work_file("dup.hg");
  std::ofstream(dup) << "6 3 2\n0 1 2\n0 1 2\n";
  const RunResult dup_result = run_cli("match " + dup);
  CHECK(dup_result.status == 1);
  CHECK(dup_result.err.find("line 3") != std::string::npos);

  CHECK(run_cli("match " + work_file("no_such_file.hg")).status == 1);

  // enumeration cap: absorbing counts are exact only up to n = 14
  const std::string big = work_file("big.hg");
  REQUIRE(run_cli("construct random 15 3 1/2 --seed 4 --out " + big).status ==
          0);
  CHECK(run_cli("absorb " + big + " --x 0 --y 1").status == 2);

  // budget exhaustion carries the partial bound
  const RunResult budget =
      run_cli("threshold --k 3 --ell 1 --n 6 --brute --budget 64");
  CHECK(budget.status == 2);
  CHECK(budget.err.find("budget") != std::string::npos);

  // random construction demands a seed
  CHECK(run_cli("construct random 6 3 1/2 --out " + big).status == 1);
}

TEST_CASE("verify suites pass and report") {
  const RunResult r = run_cli("verify --suite parity");
  CHECK(r.status == 0);
  CHECK(r.out.find("[pass]") != std::string::npos);
  CHECK(run_cli("verify --suite no-such-suite").status == 1);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string rnd = work_file("rnd.hg");
  const std::string again = work_file("rnd2.hg");
  REQUIRE(run_cli("construct random 10 3 7/10 --seed 42 --out " + rnd)
              .status == 0);
  REQUIRE(run_cli("construct random 10 3 7/10 --seed 42 --out " + again)
              .status == 0);
  CHECK(slurp(rnd) == slurp(again));

  const std::string a = run_cli("fracmatch " + rnd + " --json").out;
  const std::string b = run_cli("fracmatch " + rnd + " --json").out;
  CHECK(a == b);
}
