// Golden end-to-end checks for the command-line tool: byte-exact expected
// output for small hand-derived instances, plus the exit-code contract.
// Run via ctest (test name "cli_golden") or directly:
//
//   bienum_cli_golden <path-to-cli-binary>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

namespace fs = std::filesystem;

std::string g_cli;
fs::path g_dir;
int g_failures = 0;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const char* name, const std::string& text) {
  const fs::path p = g_dir / name;
  std::ofstream(p) << text;
  return p.string();
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const fs::path sink = g_dir / "run_output";
  const std::string cmd =
      "'" + g_cli + "' " + args + " > '" + sink.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = status < 0 ? status : WEXITSTATUS(status);
  r.output = read_file(sink);
  return r;
}

void expect_output(const std::string& label, const std::string& args,
                   const std::string& expected) {
  const RunResult r = run(args);
  if (r.exit_code != 0) {
    ++g_failures;
    std::cout << "FAIL " << label << ": exit " << r.exit_code << '\n'
              << r.output;
    return;
  }
  if (r.output != expected) {
    ++g_failures;
    std::cout << "FAIL " << label << ": output differs\n--- expected ---\n"
              << expected << "--- actual ---\n"
              << r.output;
    return;
  }
  std::cout << "ok   " << label << '\n';
}

void expect_exit(const std::string& label, const std::string& args,
                 int expected) {
  const RunResult r = run(args);
  if (r.exit_code != expected) {
    ++g_failures;
    std::cout << "FAIL " << label << ": exit " << r.exit_code << ", expected "
              << expected << '\n'
              << r.output;
    return;
  }
  std::cout << "ok   " << label << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cout << "FAIL: no CLI binary path given\n";
    return 1;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / "bienum_cli_golden";
  fs::create_directories(g_dir);

  const std::string five = fixture("five.txt", "0 4\n1 2\n2 1\n4 0\n3 3\n");
  const std::string unc = fixture("unc.txt", "unconstrained 2\n1 2\n");
  const std::string kp = fixture("kp.txt", "knapsack 2 2 3\n1 2\n2 3\n");
  const std::string three = fixture("three.txt", "0 2\n1 1\n2 0\n");
  const std::string chain9 = fixture(
      "chain9.txt",
      "directed 9 8 0 8\n0 1 1 1\n1 2 1 1\n2 3 1 1\n3 4 1 1\n4 5 1 1\n"
      "5 6 1 1\n6 7 1 1\n7 8 1 1\n");
  const std::string unreachable =
      fixture("unreachable.txt", "directed 3 1 0 2\n0 1 1 1\n");

  // Hand trace of the lex dichotomy on the five-point set: the two seed
  // calls find (0,4) and (4,0); probing their gap with weight (4,4) finds
  // (1,2) on the third call; the (0,4)-(1,2) gap certifies empty; probing
  // (1,2)-(4,0) with weight (2,3) finds (2,1) on the fifth call; the last
  // two gaps certify empty, for 7 = 2·4−1 calls in total.
  expect_output(
      "extremes da-lex five-point trace",
      "extremes --algorithm da-lex --input '" + five + "'",
      R"({"i":1,"point":["0","4"],"ws_calls":0,"lex_calls":1,"eps_calls":0,"t_mono_ns":0}
{"i":2,"point":["4","0"],"ws_calls":0,"lex_calls":2,"eps_calls":0,"t_mono_ns":0}
{"i":3,"point":["1","2"],"ws_calls":0,"lex_calls":3,"eps_calls":0,"t_mono_ns":0}
{"i":4,"point":["2","1"],"ws_calls":0,"lex_calls":5,"eps_calls":0,"t_mono_ns":0}
{"count":4,"total_calls":{"ws":0,"lex":7,"eps":0},"max_interemission_lex_calls":2}
)");

  // All four subset sums of c = (1,2) survive on the line y2 = -y1.
  expect_output(
      "front prop1-merge c=(1,2)",
      "front --algorithm prop1-merge --input '" + unc + "'",
      R"({"i":1,"point":["0","0"],"ws_calls":0,"lex_calls":0,"eps_calls":0,"t_mono_ns":0}
{"i":2,"point":["1","-1"],"ws_calls":0,"lex_calls":0,"eps_calls":0,"t_mono_ns":0}
{"i":3,"point":["2","-2"],"ws_calls":0,"lex_calls":0,"eps_calls":0,"t_mono_ns":0}
{"i":4,"point":["3","-3"],"ws_calls":0,"lex_calls":0,"eps_calls":0,"t_mono_ns":0}
{"count":4,"total_calls":{"ws":0,"lex":0,"eps":0},"max_interemission_lex_calls":0}
)");

  // Chain gadget for c1=(1,2), c2=(2,3), k1=2, k2=3: chain nodes 0,1,2,
  // detours 3,4, collector 5; per-item arc blocks, then the two bound
  // detours with costs (k1+1, 0) and (0, sum(c2) - k2 + 1).
  expect_output("generate-gadget layout",
                "generate-gadget --input '" + kp + "'",
                "directed 6 9 0 2\n"
                "0 3 1 0\n"
                "0 1 0 2\n"
                "3 1 0 0\n"
                "1 4 2 0\n"
                "1 2 0 3\n"
                "4 2 0 0\n"
                "0 2 3 0\n"
                "0 5 0 3\n"
                "5 2 0 0\n"
                "M: (3,0) (0,3)\n");

  // A three-point front costs exactly four sweep calls.
  expect_output(
      "bench-delay eps-sweep three-point front",
      "bench-delay --algorithm eps-sweep --input '" + three + "'",
      R"({"i":1,"point":["2","0"],"ws_calls":0,"lex_calls":0,"eps_calls":1,"t_mono_ns":0}
{"i":2,"point":["1","1"],"ws_calls":0,"lex_calls":0,"eps_calls":2,"t_mono_ns":0}
{"i":3,"point":["0","2"],"ws_calls":0,"lex_calls":0,"eps_calls":3,"t_mono_ns":0}
{"count":3,"total_calls":{"ws":0,"lex":0,"eps":4},"max_interemission_lex_calls":0}
{"verdict":"PASS","emissions":3,"checks":[{"metric":"eps_calls","value":4,"limit":4,"pass":true}]}
)");

  // Exit-code contract: usage 2, capacity 3, infeasible 4.
  expect_exit("usage error exits 2",
              "extremes --algorithm bilp-walk --input '" + five + "'", 2);
  expect_exit("unknown flag exits 2",
              "extremes --algorithm da-lex --input '" + five + "' --bogus", 2);
  expect_exit("node cap exits 3", "brute --input '" + chain9 + "'", 3);
  expect_exit("unreachable target exits 4",
              "extremes --algorithm da-lex --input '" + unreachable + "'", 4);

  if (g_failures == 0) {
    std::cout << "cli golden: all checks passed\n";
    return 0;
  }
  std::cout << "cli golden: " << g_failures << " check(s) failed\n";
  return 1;
}
