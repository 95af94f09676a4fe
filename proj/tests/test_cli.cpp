// SPDX-License-Identifier: MIT
#include "tmt/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace tmt;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"tmt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream os(path);
    os << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli msf") {
  const CliResult r = run({"msf", "binary53", "--reduce"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "spanlength 6"));
  // [PAPER] the left-right reduced MSF of the [5,3] code is G itself.
  CHECK(contains(r.out, "1 1 1 0 0\n0 1 1 0 1\n0 0 1 1 0\n"));
  CHECK(contains(r.out, "[1, 4]"));

  // [PAPER] right flavor on a scrambled dual generator gives the H10 display.
  const TempFile h("cli_tmp_h.txt", "2 2 5\n1 1 0 0 1\n0 1 1 1 0\n");
  const CliResult rh = run({"msf", h.path, "--reduce", "--flavor", "right"});
  CHECK(rh.code == 0);
  CHECK(contains(rh.out, "0 1 1 1 0\n1 0 1 1 1\n"));
}

TEST_CASE("cli char") {
  const CliResult r = run({"char", "gf3-example"});
  CHECK(r.code == 0);
  // [PAPER] golden rows and the span permutation.
  CHECK(contains(r.out, "2 2 1 0\n0 1 1 1\n1 0 1 2\n2 1 0 2\n"));
  CHECK(contains(r.out, "1 2 0 1"));  // a Y row
  CHECK(contains(r.out, "sigma: 2 3 0 1"));
  CHECK(contains(r.out, "(3, 1]"));
  const CliResult rd = run({"char", "gf3-example", "--method", "direct"});
  CHECK(rd.code == 0);
  CHECK(contains(rd.out, "2 1 0 2"));

  const CliResult rj = run({"char", "gf3-example", "--json"});
  CHECK(rj.code == 0);
  const nlohmann::json j = nlohmann::json::parse(rj.out);
  CHECK(j["x"][0] == nlohmann::json({2, 2, 1, 0}));
  CHECK(j["reduced"] == true);

  const CliResult rb = run({"char", "gf3-example", "--band", "2"});
  CHECK(rb.code == 0);
  CHECK(contains(rb.out, "2 2 1 0 . . . . . . . ."));
  CHECK(contains(rb.out, ". 0 1 2 1 . . . . . . ."));
}

TEST_CASE("cli trellis") {
  const CliResult r = run({"trellis", "gf3-example", "--rows", "0,2", "--construction", "product"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "profile: 1 1 1 1"));
  CHECK(contains(r.out, "boundary 0"));

  const CliResult rdot =
      run({"trellis", "gf3-example", "--rows", "0,2", "--construction", "product", "--dot"});
  CHECK(rdot.code == 0);
  CHECK(rdot.out.rfind("digraph trellis {", 0) == 0);

  const CliResult rb =
      run({"trellis", "gf3-example", "--rows", "0,2", "--construction", "bcjr", "--labels", "y"});
  CHECK(rb.code == 0);
  CHECK(contains(rb.out, "profile: 1 1 1 1"));

  // Dependent selection: warning, still renders.
  const CliResult rdep = run({"trellis", "gf3-example", "--rows", "0,1,2,3"});
  CHECK(rdep.code == 0);
  CHECK(contains(rdep.err, "not one-to-one"));

  // Dual mode needs an independent selection.
  const CliResult rdual = run({"trellis", "binary53", "--rows", "0,1,2", "--dual"});
  CHECK(rdual.code == 0);
  const CliResult rbad = run({"trellis", "binary53", "--rows", "0,1,4", "--dual"});
  CHECK(rbad.code == 1);
  CHECK(contains(rbad.err, "dependent"));
}

TEST_CASE("cli labelcode") {
  const CliResult r = run({"labelcode", "gf3-example"});
  CHECK(r.code == 0);
  CHECK(contains(r.out,
                 "0000 |2| 1110 |2| 1021 |1| 0000 |0| 0000\n"
                 "0000 |0| 0000 |1| 0122 |1| 2101 |1| 0000\n"
                 "1110 |1| 0000 |0| 0000 |1| 2012 |2| 1110\n"
                 "2101 |2| 0211 |1| 0000 |0| 0000 |2| 2101\n"));
  const CliResult rx = run({"labelcode", "gf3-example", "--direction", "xy"});
  CHECK(rx.code == 0);
  CHECK(contains(rx.out, "1021 |1| 0000 |0| 0000 |1| 1110 |2| 1021\n"));

  const CliResult rm = run({"labelcode", "binary53", "--rows", "0,2,4"});
  CHECK(rm.code == 0);
  CHECK(contains(rm.out,
                 ".0.0. |1| .1.0. |1| .0.1. |1| .0.0. |0| .0.0. |0| .0.0.\n"
                 "..... |.| ..... |.| ..... |.| ..... |.| ..... |.| .....\n"));
  const CliResult rm2 = run({"labelcode", "binary53", "--rows", "1,3", "--direction", "xy"});
  CHECK(rm2.code == 0);
  CHECK(contains(rm2.out, "0.0.1 |1| 1.0.0 |1| 0.0.0 |0| 0.0.0 |0| 0.0.0 |1| 0.0.1\n"));
}

TEST_CASE("cli verify") {
  const CliResult r = run({"verify", "gf3-example"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].is_object());
  CHECK(j["checks"]["duality.x_orth_y"] == true);
  CHECK(j["checks"]["spans.agree"] == true);
  for (const auto& [name, val] : j["checks"].items()) {
    CHECK_MESSAGE(val == true, name);
  }

  // Pair mode with one flipped entry: orthogonality named as the failure.
  const TempFile xf("cli_tmp_x.txt", "3 4 4\n2 0 1 0\n0 1 1 1\n1 0 1 2\n2 1 0 2\n");
  const TempFile yf("cli_tmp_y.txt", "3 4 4\n1 0 1 2\n1 2 0 1\n1 1 2 0\n0 1 1 1\n");
  const CliResult rp = run({"verify", "--x", xf.path, "--y", yf.path});
  CHECK(rp.code == 1);
  const nlohmann::json jp = nlohmann::json::parse(rp.out);
  CHECK(jp["pass"] == false);
  CHECK(jp["checks"]["duality.x_orth_y"] == false);

  const CliResult rr = run({"verify", "--random", "--p", "5", "--n", "8", "--k", "3", "--seed", "1"});
  CHECK(rr.code == 0);
  CHECK(nlohmann::json::parse(rr.out)["pass"] == true);

  // Rank-deficient input is an input error, not a failed verification.
  const TempFile bad("cli_tmp_bad.txt", "2 2 4\n1 1 0 0\n1 1 0 0\n");
  CHECK(run({"verify", bad.path}).code == 2);
}

TEST_CASE("cli lpu") {
  const TempFile a("cli_tmp_a.txt", "2 3 3\n1 1 0\n1 1 1\n0 1 1\n");
  const CliResult r = run({"lpu", a.path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "L ="));
  CHECK(contains(r.out, "P ="));
  CHECK(contains(r.out, "U ="));
  const CliResult rc = run({"lpu", a.path, "--corner", "sw"});
  CHECK(rc.code == 0);
  // [DERIVED] southwest Bruhat corner of the 3x3 example.
  CHECK(contains(rc.out, "0 0 1\n1 0 0\n0 1 0\n"));
}

TEST_CASE("cli rooks") {
  const CliResult r = run({"rooks", "gf3-example"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, ". . B .\n. . . B\nW . . .\n. W . .\n"));
  const CliResult rs = run({"rooks", "suzuki-rooks"});
  CHECK(rs.code == 0);
  CHECK(contains(rs.out, ". . . . . . . . . . . . 0\n"));
  CHECK(contains(rs.out, "4 . . . . . . . . . . . .\n"));
}

TEST_CASE("cli input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"msf", "no-such-input"}).code == 2);
  CHECK(run({"char", "no-such-fixture"}).code == 2);
  const TempFile empty("cli_tmp_empty.txt", "");
  CHECK(run({"msf", empty.path}).code == 2);
  CHECK(run({"trellis", "gf3-example", "--rows", "0,x"}).code == 2);
  CHECK(run({"labelcode", "gf3-example", "--rows", "9"}).code == 2);
  // Spans-only fixture cannot feed the pair pipeline.
  CHECK(run({"verify", "suzuki-rooks"}).code == 2);
  const CliResult err = run({"msf", "no-such-input"});
  CHECK(!err.err.empty());
}
