#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

// Drives the built binary end to end.  Every stdout comparison here is exact:
// the tool promises byte-stable output for fixed inputs.

namespace {

const std::string kCli = KHC_CLI_PATH;
const std::string kData = std::string(KHC_DATA_DIR) + "/inversions.txt";

struct RunResult {
  std::string out;
  int code = -1;
};

void write_file(const std::string& path, const std::string& text) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

RunResult run(const std::string& args, bool merge_stderr = false,
              const std::string& stdin_text = "") {
  std::string cmd = kCli + " " + args;
  if (!stdin_text.empty()) {
    write_file("/tmp/khc_cli_stdin.txt", stdin_text);
    cmd += " < /tmp/khc_cli_stdin.txt";
  }
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.code = WEXITSTATUS(status);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const char* kTrefoilPd = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) bp 1\n";

}  // namespace

TEST_CASE("kh prints a stable homology table") {
  const RunResult r = run("kh --torus 2 3");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "q=2 h=0 dim=1\n"
        "q=6 h=2 dim=1\n"
        "q=8 h=3 dim=1\n"
        "total dim = 3\n"
        "det = 3\n");

  const RunResult tsv = run("kh --torus 2 3 --tsv");
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "q\th\tdim\n2\t0\t1\n6\t2\t1\n8\t3\t1\n");

  const RunResult big = run("kh --torus 5 -9");
  CHECK(big.code == 0);
  CHECK(contains(big.out, "total dim = 57\ndet = 1\n"));
}

TEST_CASE("the oracle route prints the same bytes") {
  const RunResult scan = run("kh --two-bridge 7 3");
  const RunResult cube = run("kh --two-bridge 7 3 --oracle");
  CHECK(scan.code == 0);
  CHECK(cube.code == 0);
  CHECK(!scan.out.empty());
  CHECK(scan.out == cube.out);
}

TEST_CASE("PD input reads files and stdin alike") {
  const std::string want = run("kh --torus 2 3").out;

  write_file("/tmp/khc_cli_trefoil.pd", kTrefoilPd);
  const RunResult from_file = run("kh --pd /tmp/khc_cli_trefoil.pd");
  CHECK(from_file.code == 0);
  CHECK(from_file.out == want);

  const RunResult from_stdin = run("kh --pd -", false, kTrefoilPd);
  CHECK(from_stdin.code == 0);
  CHECK(from_stdin.out == want);
}

TEST_CASE("pair reproduces the figure pairings") {
  const RunResult special = run("pair \"a(0)\" \"s2(inf)\"");
  CHECK(special.code == 0);
  CHECK(special.out ==
        "q=-5 h=-2 dim=1\n"
        "q=-1 h=0 dim=1\n"
        "q=1 h=1 dim=1\n"
        "q=5 h=3 dim=1\n"
        "total dim = 4\n");

  const RunResult quotient = run("pair \"a(inf)\" \"r1(4) + s2(inf)\"");
  CHECK(quotient.code == 0);
  CHECK(quotient.out == "q=9 h=5 dim=1\ntotal dim = 1\n");

  // the spelled-out arc form is an alias
  CHECK(run("pair \"arc inf\" \"r1(4) + s2(inf)\"").out == quotient.out);
}

TEST_CASE("kappa prints the record and its blocks") {
  const RunResult r = run("kappa --data " + kData + " 4_1");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "knot=4_1 inv=1 k=0 n=2 shifts=(5/2,11/2);(13/2,9/2)\n"
        "q=11 h=0 dim=1\n"
        "q=15 h=2 dim=1\n"
        "q=17 h=3 dim=1\n"
        "q=17 h=4 dim=1\n"
        "q=21 h=5 dim=1\n"
        "q=21 h=6 dim=1\n"
        "q=23 h=7 dim=1\n"
        "q=27 h=9 dim=1\n"
        "total dim = 8\n");

  const RunResult second = run("kappa --data " + kData + " 9_46 2");
  CHECK(second.code == 0);
  CHECK(contains(second.out, "total dim = 28\n"));

  const RunResult ambiguous = run("kappa --data " + kData + " 9_46", true);
  CHECK(ambiguous.code == 2);
  CHECK(contains(ambiguous.out, "2 inversions on file"));

  const RunResult missing = run("kappa --data " + kData + " 10_99", true);
  CHECK(missing.code == 2);
  CHECK(contains(missing.out, "no record for 10_99"));
}

TEST_CASE("table output is byte-stable in both modes") {
  const RunResult r = run("table --data " + kData);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# conventions: quantum gradings integral (doubled), delta = q/2 - h\n"
        "3_1^1  k=-4  n=1  dim=4  kappa = h^{1/2} delta^{-1/2} Vk\n"
        "4_1^1  k=0  n=2  dim=8  kappa = h^{5/2} delta^{11/2} Vk + "
        "h^{13/2} delta^{9/2} Vk\n"
        "9_46^1  k=8  n=4  dim=16  kappa = h^{1/2} delta^{1/2} Vk + "
        "h^{5/2} delta^{1/2} Vk + h^{9/2} delta^{1/2} Vk + "
        "h^{11/2} delta^{3/2} Vk\n"
        "9_46^2  k=12  n=7  dim=28  kappa = h^{1/2} delta^{1/2} Vk + "
        "h^{5/2} delta^{1/2} Vk + h^{9/2} delta^{1/2} Vk + "
        "h^{13/2} delta^{1/2} Vk + h^{15/2} delta^{3/2} Vk + "
        "h^{17/2} delta^{1/2} Vk + h^{21/2} delta^{3/2} Vk\n"
        "m3_1^1  k=4  n=1  dim=4  kappa = h^{-1/2} delta^{1/2} Vk\n");

  const RunResult tsv = run("table --tsv --data " + kData);
  CHECK(tsv.code == 0);
  CHECK(tsv.out ==
        "knot\tinv\tk\tn\tdim\n"
        "3_1\t1\t-4\t1\t4\n"
        "4_1\t1\t0\t2\t8\n"
        "9_46\t1\t8\t4\t16\n"
        "9_46\t2\t12\t7\t28\n"
        "m3_1\t1\t4\t1\t4\n");
}

TEST_CASE("usage and parse errors exit with status 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate", true).code == 2);
  CHECK(run("kh --bogus", true).code == 2);
  CHECK(run("kh", true).code == 2);
  CHECK(run("kh --torus 2", true).code == 2);
  CHECK(run("kh --torus 2 3 --pd x", true).code == 2);
  CHECK(run("kh --pd /tmp/khc_cli_no_such_file.pd", true).code == 2);
  CHECK(run("pair \"r1(0)\" \"r1(0)\"", true).code == 2);
  CHECK(run("pair \"a(0)\" \"what\"", true).code == 2);

  const RunResult bad_pd = run("kh --pd -", false, "X(1,2,3) bp 1\n");
  CHECK(bad_pd.code == 2);
  CHECK(bad_pd.out.empty());  // diagnostics go to stderr

  CHECK(run("--help").code == 0);
  CHECK(contains(run("--help").out, "Subcommands"));
}

TEST_CASE("verify reports per-criterion lines and fails loudly") {
  // A missing records file sinks the data-driven criteria but not the rest;
  // the command must show every line and exit nonzero.
  const RunResult r = run("verify --data /tmp/khc_cli_no_such_table.txt");
  CHECK(r.code == 1);
  int lines = 0;
  for (size_t at = r.out.find("criterion "); at != std::string::npos;
       at = r.out.find("criterion ", at + 1))
    ++lines;
  CHECK(lines == 10);
  CHECK(contains(r.out, "scan agrees with the resolution cube): PASS"));
  CHECK(contains(r.out, "FAIL"));
}
