#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "matroidlab/catalog.hpp"
#include "matroidlab/io.hpp"

using namespace matroidlab;

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string out_path = "/tmp/matroidlab_cli_" + std::to_string(counter++) + ".out";
  std::string cmd = std::string(MATROIDLAB_BIN) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WEXITSTATUS(status);
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  r.output = os.str();
  std::remove(out_path.c_str());
  return r;
}

std::string data(const char* name) {
  return std::string(MATROIDLAB_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("validate") {
  auto good = run("validate " + data("u24_bases.mat"));
  CHECK(good.code == 0);
  CHECK(good.output.find("valid: U24") != std::string::npos);

  auto bad = run("validate " + data("broken_f2prime.mat"));
  CHECK(bad.code == 2);
  CHECK(bad.output.find("F2PrimeViolated") != std::string::npos);
  CHECK(bad.output.find("{0}") != std::string::npos);  // the witness flat

  auto missing = run("validate /nonexistent.mat");
  CHECK(missing.code == 2);
}

TEST_CASE("analyze") {
  auto r = run("analyze " + data("pg32_minus_point.mat"));
  CHECK(r.code == 0);
  CHECK(r.output.find("modular: no") != std::string::npos);
  CHECK(r.output.find("hypermodular: yes") != std::string::npos);
  CHECK(r.output.find("modular defect: 49") != std::string::npos);
  CHECK(r.output.find("non-modular pairs: 49 (plane-line 28, line-line 21)") !=
        std::string::npos);
}

TEST_CASE("detect-vamos prints the arrangement with the element labels") {
  auto r = run("detect-vamos " + data("vamos.mat"));
  CHECK(r.code == 0);
  CHECK(r.output.find("1 vamos") != std::string::npos);
  CHECK(r.output.find("{1,2} {3,4} {5,6} {7,8}") != std::string::npos);

  auto wrong_rank = run("detect-vamos " + data("two_lines.mat"));
  CHECK(wrong_rank.code == 2);
}

TEST_CASE("cuts") {
  auto r = run("cuts " + data("pg32_minus_point.mat"));
  CHECK(r.code == 0);
  CHECK(r.output.find("1 non-principal modular cut") != std::string::npos);

  auto not_hyper = run("cuts " + data("vamos.mat"));
  CHECK(not_hyper.code == 1);
  CHECK(not_hyper.output.find("NotHypermodular") != std::string::npos);
}

TEST_CASE("complete") {
  auto r = run("complete " + data("pg32_minus_point.mat") + " --out /tmp/completed.mat");
  CHECK(r.code == 0);
  CHECK(r.output.find("steps: 1, non-principal cuts of input: 1") != std::string::npos);
  CHECK(r.output.find("result: n=15 rank=4 modular=yes") != std::string::npos);
  Matroid completed = to_matroid(parse_matroid_file(slurp("/tmp/completed.mat")));
  CHECK(completed.size() == 15);

  auto not_hyper = run("complete " + data("vamos.mat"));
  CHECK(not_hyper.code == 1);

  auto policies_agree = run("complete " + data("pg32_minus_point.mat") + " --policy revlex");
  CHECK(policies_agree.code == 0);
  CHECK(policies_agree.output.find("steps: 1") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* args : {"analyze", "detect-vamos", "cuts", "complete"}) {
    std::string invocation =
        std::string(args) + " " + data("pg32_minus_point.mat") + " --report ";
    auto a = run(invocation + "/tmp/rep_a.json");
    auto b = run(invocation + "/tmp/rep_b.json");
    CAPTURE(args);
    CHECK(a.code == 0);
    CHECK(a.output == b.output);
    std::string ja = slurp("/tmp/rep_a.json");
    CHECK(!ja.empty());
    CHECK(ja == slurp("/tmp/rep_b.json"));
  }
}

TEST_CASE("amalgam") {
  auto none = run("amalgam " + data("two_lines_ext1.mat") + " " + data("two_lines_ext2.mat") +
                  " --shared 6");
  CHECK(none.code == 1);
  CHECK(none.output.find("no amalgam exists") != std::string::npos);

  auto self = run("amalgam " + data("two_lines_ext1.mat") + " " + data("two_lines_ext1.mat") +
                  " --shared 6");
  CHECK(self.code == 0);
  CHECK(self.output.find("amalgam found") != std::string::npos);

  auto budget = run("amalgam " + data("two_lines_ext1.mat") + " " +
                    data("two_lines_ext2.mat") + " --shared 6 --max-nodes 40");
  CHECK(budget.code == 3);

  auto mismatched = run("amalgam " + data("two_lines_ext1.mat") + " " + data("vamos.mat") +
                        " --shared 6");
  CHECK(mismatched.code == 2);
}

TEST_CASE("catalog") {
  auto r = run("catalog vamos");
  CHECK(r.code == 0);
  CHECK(to_matroid(parse_matroid_file(r.output)) == vamos());

  auto quoted = run("catalog 'uniform(2,4)'");
  CHECK(quoted.code == 0);
  CHECK(to_matroid(parse_matroid_file(quoted.output)) == uniform(2, 4));

  CHECK(run("catalog nonsense").code == 2);
  CHECK(run("catalog 'pg3(7)'").code == 2);
}

TEST_CASE("MATROID_MAX_N lowers the size cap") {
  std::string cmd = "MATROID_MAX_N=8 " + std::string(MATROIDLAB_BIN) + " validate " +
                    data("pg32.mat") + " > /tmp/maxn.out 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(slurp("/tmp/maxn.out").find("ground set size") != std::string::npos);
  std::remove("/tmp/maxn.out");
}

TEST_CASE("data files match the library's canonical serialization") {
  CHECK(slurp(data("vamos.mat")) == serialize(vamos(), "vamos"));
  CHECK(slurp(data("pg32.mat")) == serialize(pg3(2), "pg32"));
  CHECK(slurp(data("pg32_minus_point.mat")) ==
        serialize(delete_elements(pg3(2), single(0)), "pg32_minus_point"));
}
