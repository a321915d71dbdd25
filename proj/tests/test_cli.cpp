#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) {
  return std::string(MOCKLIE_SOURCE_DIR) + "/fixtures/" + name;
}

std::string golden(const std::string& name) {
  return read_file(std::string(MOCKLIE_SOURCE_DIR) + "/tests/golden/" + name);
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string tag = "/tmp/mocklie_cli_" + std::to_string(getpid()) + "_" +
                    std::to_string(counter++);
  std::string cmd = std::string(MOCKLIE_BIN) + " " + args + " > " + tag + ".out 2> " +
                    tag + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(tag + ".out");
  r.err = read_file(tag + ".err");
  std::remove((tag + ".out").c_str());
  std::remove((tag + ".err").c_str());
  return r;
}

struct GoldenCase {
  const char* name;
  std::string args;
  int exit_code;
};

}  // namespace

TEST_CASE("recorded commands reproduce their output byte for byte") {
  const GoldenCase cases[] = {
      {"check_e2", "check " + fixture("e2.alg"), 0},
      {"check_g2_mock_lie", "check --mock-lie " + fixture("g2lambda1.alg"), 1},
      {"check_g2_structured",
       "check --mock-lie --format structured " + fixture("g2lambda1.alg"), 1},
      {"check_d4", "check " + fixture("d4.alg"), 0},
      {"check_h3_structured", "check --format structured " + fixture("h3.alg"), 0},
      {"props_e2h", "props " + fixture("e2h.alg"), 0},
      {"props_h3_structured", "props --format structured " + fixture("h3.alg"), 0},
      {"direct_sum", "construct direct-sum " + fixture("e2.alg") + " " + fixture("s2.alg"), 0},
      {"tensor_on",
       "construct tensor " + fixture("h3.alg") + " " + fixture("grassmann1.alg") +
           " --koszul on",
       0},
      {"tensor_off",
       "construct tensor " + fixture("h3.alg") + " " + fixture("grassmann1.alg") +
           " --koszul off",
       0},
      {"semidirect", "construct semidirect " + fixture("e2.alg") + " --rep ad", 0},
      {"central_ext",
       "construct central-ext " + fixture("e2.alg") + " --rep ad --cocycle w", 0},
      {"tstar_e2", "construct tstar " + fixture("e2.alg"), 0},
      {"double_ext",
       "construct double-ext " + fixture("e2h.alg") + " " + fixture("k1.alg") + " --phi act",
       0},
      {"gdext_a22", "construct gdext " + fixture("a22.alg") + " --map d1", 0},
      {"decompose_s2", "decompose " + fixture("s2.alg"), 0},
      {"decompose_s2_structured", "decompose --format structured " + fixture("s2.alg"), 0},
      {"decompose_a22", "decompose " + fixture("a22.alg"), 0},
      {"isometry_pass",
       "isometry " + fixture("a22.alg") + " --d1 d1 --d2 d2 --s s --alpha 2", 0},
      {"isometry_fail",
       "isometry " + fixture("a22.alg") + " --d1 d1 --d2 d2 --s s --alpha 1", 1},
      {"intertwiner_e2h", "intertwiner " + fixture("e2h.alg"), 0},
  };
  for (const GoldenCase& c : cases) {
    CAPTURE(c.name);
    RunResult r = run_cli(c.args);
    CHECK(r.exit_code == c.exit_code);
    CHECK(r.out == golden(std::string(c.name) + ".out"));
    CHECK(r.err == golden(std::string(c.name) + ".err"));
  }
}

TEST_CASE("repeated invocations are byte identical") {
  for (const std::string args :
       {"check " + fixture("d4.alg") + " --seed 7 --samples 12",
        "construct gdext " + fixture("a22.alg") + " --map d1",
        "decompose " + fixture("a22.alg")}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("environment variables stand in for the global flags") {
  ::setenv("MOCKLIE_FORMAT", "structured", 1);
  RunResult via_env = run_cli("check " + fixture("h3.alg"));
  ::unsetenv("MOCKLIE_FORMAT");
  CHECK(via_env.exit_code == 0);
  CHECK(via_env.err == golden("check_h3_structured.err"));

  ::setenv("MOCKLIE_KOSZUL", "off", 1);
  RunResult off_env =
      run_cli("construct tensor " + fixture("h3.alg") + " " + fixture("grassmann1.alg"));
  ::unsetenv("MOCKLIE_KOSZUL");
  CHECK(off_env.out == golden("tensor_off.out"));
}

TEST_CASE("documents can be written to a file instead of stdout") {
  std::string target = "/tmp/mocklie_cli_doc_" + std::to_string(getpid()) + ".alg";
  RunResult r = run_cli("construct direct-sum " + fixture("e2.alg") + " " +
                        fixture("s2.alg") + " -o " + target);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(target) == golden("direct_sum.out"));
  std::remove(target.c_str());
}

TEST_CASE("input problems exit with code 2 and a diagnostic") {
  RunResult missing = run_cli("check /no/such/file.alg");
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  std::string bad = "/tmp/mocklie_cli_bad_" + std::to_string(getpid()) + ".alg";
  {
    std::ofstream f(bad);
    f << R"({"name": "x", "dims": {"even": 1, "odd": 0},
             "products": [{"i": 0, "j": 0, "terms": [{"k": 0, "c": "1/0"}]}]})";
  }
  RunResult malformed = run_cli("check " + bad);
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.err.find("malformed rational \"1/0\"") != std::string::npos);
  std::remove(bad.c_str());

  CHECK(run_cli("check --axioms no_such_axiom " + fixture("e2.alg")).exit_code == 2);
  CHECK(run_cli("check --form " + fixture("e2.alg")).exit_code == 2);
  CHECK(run_cli("check --mock-lie --axioms evenness " + fixture("e2.alg")).exit_code == 2);
  CHECK(run_cli("isometry " + fixture("a22.alg") + " --d1 d1 --d2 d2").exit_code == 2);
  CHECK(run_cli("construct gdext " + fixture("a22.alg") + " --map d1 --x0 1,2").exit_code ==
        2);
  CHECK(run_cli("construct semidirect " + fixture("e2.alg") + " --rep nope").exit_code == 2);
  CHECK(run_cli("decompose " + fixture("h3.alg")).exit_code == 2);
  // an even algebra decomposes in zero steps rather than failing
  CHECK(run_cli("decompose " + fixture("e2h.alg")).exit_code == 0);
}

TEST_CASE("help is available at exit code zero") {
  RunResult top = run_cli("--help");
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("check") != std::string::npos);
  CHECK(top.out.find("decompose") != std::string::npos);
  RunResult sub = run_cli("construct --help");
  CHECK(sub.exit_code == 0);
  CHECK(sub.out.find("gdext") != std::string::npos);
  CHECK(run_cli("").exit_code == 2);
}
