#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// Exercises the installed command surface: subcommands, exit codes, output
// shapes, and the stability of --json output. The binary path and the data
// directory come from the build system.

#ifndef G1KNOT_CLI_PATH
#error "G1KNOT_CLI_PATH must be defined"
#endif
#ifndef G1KNOT_DATA_DIR
#error "G1KNOT_DATA_DIR must be defined"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(G1KNOT_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_file(const std::string& name) {
  return std::string(G1KNOT_DATA_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("pretzel reports") {
  const RunResult trefoil = run_cli("pretzel 1 1 1");
  CHECK(trefoil.exit_code == 0);
  CHECK(contains(trefoil.output, "lambda'          = 1"));
  CHECK(contains(trefoil.output, "w_delta(a,b,c)   = -2"));
  CHECK(contains(trefoil.output, "w_SL             = 1/6"));
  CHECK(contains(trefoil.output, "t - 1 + t^-1"));

  const RunResult eight = run_cli("pretzel -- -1 3 -1");
  CHECK(eight.exit_code == 0);
  CHECK(contains(eight.output, "lambda'          = -1"));
  CHECK(contains(eight.output, "w_delta(a,b,c)   = 0"));
  CHECK(contains(eight.output, "-t + 3 - t^-1"));

  const RunResult family = run_cli("pretzel --json 3 5 -5");
  CHECK(family.exit_code == 0);
  CHECK(contains(family.output, "\"w_delta_abc\": \"18\""));
}

TEST_CASE("pretzel rejects non-odd framings with exit 2") {
  const RunResult even = run_cli("pretzel 2 1 1");
  CHECK(even.exit_code == 2);
  CHECK(contains(even.output, "ParityError"));

  const RunResult rational_ok = run_cli("pretzel --no-strict 1/2 1 1");
  CHECK(rational_ok.exit_code == 0);

  const RunResult garbage = run_cli("pretzel x y z");
  CHECK(garbage.exit_code == 2);
}

TEST_CASE("seifert reports") {
  const RunResult trefoil = run_cli("seifert --matrix 1,0,-1,1");
  CHECK(trefoil.exit_code == 0);
  CHECK(contains(trefoil.output, "(1, 1, 1)"));
  CHECK(contains(trefoil.output, "t - 1 + t^-1"));

  const RunResult unknot = run_cli("seifert --matrix 0,1,0,0");
  CHECK(unknot.exit_code == 0);
  CHECK(contains(unknot.output, "Delta(t)       = 1"));

  const RunResult eight = run_cli("seifert --matrix 1,1,0,-1");
  CHECK(eight.exit_code == 0);
  CHECK(contains(eight.output, "(-1, 3, -1)"));
  CHECK(contains(eight.output, "-t + 3 - t^-1"));

  const RunResult bad = run_cli("seifert --matrix 1,1,1,1");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "BadSymplectic"));
}

TEST_CASE("series prints the canonical rendering") {
  const RunResult d131 = run_cli("series --abc 1,3,1 --degree 2");
  CHECK(d131.exit_code == 0);
  CHECK(d131.output == "2 + 1/4*ub^2\n");

  const RunResult d111 = run_cli("series --abc 1,1,1 --degree 2");
  CHECK(d111.output == "1\n");

  const RunResult unknot = run_cli("series --abc -1,-1,1 --degree 0");
  CHECK(unknot.output == "0\n");
}

TEST_CASE("surface pipeline") {
  const RunResult trivial = run_cli("surface --input " + data_file("trivial_trefoil.json"));
  CHECK(trivial.exit_code == 0);
  CHECK(contains(trivial.output, "w_SL            = 1/6"));
  CHECK(contains(trivial.output, "w_3             = 1/2"));
  CHECK(contains(trivial.output, "W_s(D_2)        = 0"));

  const RunResult le1 = run_cli("surface --input " + data_file("trefoil_le1.json"));
  CHECK(le1.exit_code == 0);
  CHECK(contains(le1.output, "w_SL            = 7/6"));

  const RunResult bad = run_cli("surface --input " + data_file("bad_degree3_tail.json"));
  CHECK(bad.exit_code == 3);
  CHECK(contains(bad.output, "NotAlexanderForm"));

  const RunResult missing = run_cli("surface --input /nonexistent.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("json output is stable across runs") {
  const std::string command = "surface --json --input " + data_file("trefoil_le1.json");
  const RunResult first = run_cli(command);
  const RunResult second = run_cli(command);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(contains(first.output, "\"w_sl\": \"7/6\""));

  const RunResult p1 = run_cli("pretzel --json 1 1 1");
  const RunResult p2 = run_cli("pretzel --json 1 1 1");
  CHECK(p1.output == p2.output);
}

TEST_CASE("verify drives the identity suites") {
  const RunResult ok = run_cli("verify --seed 1 --trials 2 --degree 6 --range 1");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "identity suites passed"));

  const RunResult usage = run_cli("verify --trials 0");
  CHECK(usage.exit_code == 2);

  const RunResult faulty =
      run_cli("verify --seed 1 --trials 2 --degree 6 --range 1 --inject-fault");
  CHECK(faulty.exit_code == 1);
  CHECK(contains(faulty.output, "FAIL"));
  CHECK(contains(faulty.output, "first counterexample"));
}

TEST_CASE("unknown subcommands exit with usage code") {
  CHECK(run_cli("troll").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
