#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("ORBITFORCE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "ORBITFORCE_BIN must point at the CLI");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("derive prints a witness and uses its exit code as the answer") {
  RunResult yes = run("derive RLLRL RLL");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output == "yes\n  rule RL->e at position 3\n");

  RunResult no = run("derive L R");
  CHECK(no.exit_code == 1);
  CHECK(no.output == "no\n");

  RunResult tail = run("derive LLRL e");
  CHECK(tail.exit_code == 0);
  CHECK(tail.output == "yes\n  tail: e\n");

  RunResult trivial = run("derive RL RL");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.output == "yes\n");
}

TEST_CASE("derive usage errors exit with 2") {
  CHECK(run("derive LXR L").exit_code == 2);
  CHECK(run("derive L").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("forced prints the shortlex forced set") {
  const std::string expected =
      "e\nL\nLL\nRL\nLRL\nRLL\nLLRL\nRLRL\nRLLRL\n";
  CHECK(run("forced RLLRL").output == expected);
  CHECK(run("forced RLLRL --method derive").output == expected);
  CHECK(run("forced RLLRL --method construct").output == expected);
  CHECK(run("forced RLLRL --method realize").output == expected);
  CHECK(run("forced e").output == "e\n");
  CHECK(run("forced RLLRL --format json").output ==
        R"(["e","L","LL","RL","LRL","RLL","LLRL","RLRL","RLLRL"])"
        "\n");
}

TEST_CASE("realize prints orbit, breakpoints and tag bands") {
  CHECK(run("realize e").output ==
        "word: e\n"
        "orbit: 0\n"
        "domain: [0, 0]\n"
        "breakpoints:\n"
        "  0 -> 0\n"
        "bands:\n"
        "  {0}  e\n");

  CHECK(run("realize L").output ==
        "word: L\n"
        "orbit: 1 0\n"
        "domain: [0, 1]\n"
        "breakpoints:\n"
        "  0 -> 0\n"
        "  1 -> 0\n"
        "bands:\n"
        "  {0}  e\n"
        "  (0, 1]  L\n");

  CHECK(run("realize RLLRL").output ==
        "word: RLLRL\n"
        "orbit: -1 1/2 1/3 -1/4 1/5 0\n"
        "domain: [-1, 1/2]\n"
        "breakpoints:\n"
        "  -1 -> 1/2\n"
        "  -1/4 -> 1/5\n"
        "  0 -> 0\n"
        "  1/5 -> 0\n"
        "  1/3 -> -1/4\n"
        "  1/2 -> 1/3\n"
        "bands:\n"
        "  [-1, -19/21)  RLLRL\n"
        "  [-19/21, -16/21)  RLL\n"
        "  {-16/21}  RL\n"
        "  (-16/21, -1/4)  RLRL\n"
        "  [-1/4, 0)  RL\n"
        "  {0}  e\n"
        "  (0, 1/5]  L\n"
        "  (1/5, 17/42)  LRL\n"
        "  {17/42}  L\n"
        "  (17/42, 97/210]  LL\n"
        "  (97/210, 1/2]  LLRL\n");

  CHECK(run("realize RLLRL --format json").output ==
        R"({"domain":["-1","1/2"],"breakpoints":[["-1","1/2"],["-1/4","1/5"],)"
        R"(["0","0"],["1/5","0"],["1/3","-1/4"],["1/2","1/3"]]})"
        "\n");
}

TEST_CASE("hasse emits text, dot and json") {
  CHECK(run("hasse --max-len 0").output == "e\n");

  CHECK(run("hasse --max-len 1 --format dot").output ==
        "digraph forcing {\n"
        "  e;\n"
        "  L;\n"
        "  R;\n"
        "  L -> e;\n"
        "  R -> e;\n"
        "}\n");

  CHECK(run("hasse --max-len 2 --format json").output ==
        R"({"max_len":2,"method":"derive","nodes":["e","L","R","LL","LR","RL","RR"],)"
        R"("edges":[["L","e"],["R","e"],["LL","L"],["LR","R"],["RL","L"],["RR","R"]]})"
        "\n");

  CHECK(run("hasse --max-len 20").exit_code == 2);  // above the hard cap

  // default is --max-len 4; the reduced graph has 31 nodes and 48 covers
  std::istringstream in(run("hasse --format text").output);
  std::size_t nodes = 0, edges = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("->") != std::string::npos) {
      ++edges;
    } else if (!line.empty()) {
      ++nodes;
    }
  }
  CHECK(nodes == 31);
  CHECK(edges == 48);
}

TEST_CASE("verify cross-checks the characterizations") {
  RunResult r5 = run("verify --max-len 5");
  CHECK(r5.exit_code == 0);
  CHECK(r5.output ==
        "derive/construct agreement up to length 5: 63 words checked\n"
        "realization agreement up to length 5: 63 words checked\n"
        "OK: all characterizations agree\n");

  RunResult r0 = run("verify --max-len 0");
  CHECK(r0.exit_code == 0);
  CHECK(r0.output.find("OK") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  for (const std::string& args :
       {std::string("forced RLLRL"), std::string("realize RLLRL"),
        std::string("hasse --max-len 3 --format dot")}) {
    CHECK(run(args).output == run(args).output);
  }
}

TEST_CASE("--out writes the same bytes to a file") {
  std::string path = "cli_out_test.dot";
  RunResult direct = run("hasse --max-len 1 --format dot");
  RunResult filed = run("hasse --max-len 1 --format dot --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());
}
