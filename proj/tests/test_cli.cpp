#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "polarity/cli.hpp"

using namespace polarity;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(POLARITY_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parse command prints canonical forms") {
  CliRun r = run({"parse", "p0 &  p1"});
  CHECK(r.code == 0);
  CHECK(r.out == "formula: p0 & p1\n");

  CliRun ml = run({"parse", "--lang", "ml2", "[d]<u>P0"});
  CHECK(ml.code == 0);
  CHECK(ml.out == "formula: [d]<u>P0\nsort: 1\n");

  CliRun bad = run({"parse", "p0 &&"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("classify command on the bundled fixtures") {
  CliRun r = run({"classify", "--frame", fixture("f1r.frame")});
  CHECK(r.code == 0);
  CHECK(r.out == "NFL FL BCI BCK\n");

  CliRun rep = run({"classify", "--frame", fixture("f1r.frame"), "--report"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("classes: NFL FL BCI BCK\n") == 0);
  CHECK(rep.out.find("c4: fails at (x1)") != std::string::npos);

  CliRun missing = run({"classify", "--frame", fixture("nope.frame")});
  CHECK(missing.code == 2);
}

TEST_CASE("eval and entails on a model file") {
  CliRun r = run({"eval", "--model", fixture("fm3_model.frame"), "(p0 | p1) & p2"});
  CHECK(r.code == 0);
  CHECK(r.out == "extent: {x3}\nintent: {y3}\n");

  CliRun ml = run({"eval", "--model", fixture("fm3_model.frame"), "--lang", "ml2", "<u>P0"});
  CHECK(ml.code == 0);
  CHECK(ml.out.find("sort: 2") != std::string::npos);

  CliRun yes = run({"entails", "--model", fixture("fm3_model.frame"), "p0 & p2 |- p0"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "entails: yes\n");

  CliRun no =
      run({"entails", "--model", fixture("fm3_model.frame"), "(p0 | p1) & p2 |- (p0 & p2) | (p1 & p2)"});
  CHECK(no.code == 1);
  CHECK(no.out == "entails: no\nwitness: x3\n");
}

TEST_CASE("translate command matches the tabled goldens") {
  CliRun r = run({"translate", "--mode", "bullet", "p0 | p1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[d](<u>[d]<u>P0 | <u>[d]<u>P1)\n");

  CliRun c = run({"translate", "--mode", "circ", "p0"});
  CHECK(c.code == 0);
  CHECK(c.out == "[u]~P0\n");
}

TEST_CASE("faithful command verifies the identities and the transfer") {
  CliRun r = run({"faithful", "--model", fixture("fm3_model.frame"), "p0 | p1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: ok") != std::string::npos);

  CliRun st = run({"faithful", "--model", fixture("fm3_model.frame"), "--sequent",
                   "(p0 | p1) & p2 |- (p0 & p2) | (p1 & p2)"});
  CHECK(st.code == 0);
  CHECK(st.out.find("sub: no") != std::string::npos);
  CHECK(st.out.find("agree: yes") != std::string::npos);
}

TEST_CASE("countermodel command prints a reloadable model") {
  std::string out_path = "cli_countermodel_tmp.frame";
  CliRun r = run({"countermodel", "--class", "nfl", "--sequent", "p0 * p1 |- p1", "--max-x", "2",
                  "--max-y", "2", "--out", out_path});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: countermodel found") == 0);
  CHECK(r.out.find("frame\n") != std::string::npos);

  CliRun recheck = run({"entails", "--model", out_path, "p0 * p1 |- p1"});
  CHECK(recheck.code == 1);
  std::remove(out_path.c_str());

  CliRun none = run({"countermodel", "--class", "bck", "--sequent", "p0 * p1 |- p1", "--max-x",
                     "2", "--max-y", "2"});
  CHECK(none.code == 0);
  CHECK(none.out.find("verdict: no counterexample") == 0);
}

TEST_CASE("axioms command") {
  CliRun r = run({"axioms", "--class", "bcw", "--max-x", "2", "--max-y", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: valid") != std::string::npos);
}

TEST_CASE("canonical command emits and verifies") {
  std::string out_path = "cli_canonical_tmp.frame";
  CliRun r = run({"canonical", "--lattice", fixture("lattices/chain3_godel.lat"), "--emit-frame",
                  out_path, "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("filters: 2") == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);

  CliRun cls = run({"classify", "--frame", out_path});
  CHECK(cls.code == 0);
  CHECK(cls.out == "NFL FL BCI BCK BCW\n");
  std::remove(out_path.c_str());
}

TEST_CASE("export-fol command emits stable problems") {
  CliRun r = run({"export-fol", "--mode", "bullet", "--reduce", "--format", "fof",
                  "--include-frame-axioms", "--class", "nfl", "p0"});
  CHECK(r.code == 0);
  std::ifstream golden(fixture("golden/p0_bullet_nfl.p"));
  REQUIRE(golden.good());
  std::ostringstream gs;
  gs << golden.rdbuf();
  CHECK(r.out == gs.str());

  CliRun t = run({"export-fol", "--mode", "circ", "--format", "tff", "p0 -> p1"});
  CHECK(t.code == 0);
  std::ifstream tgolden(fixture("golden/imp_circ.p"));
  REQUIRE(tgolden.good());
  std::ostringstream ts;
  ts << tgolden.rdbuf();
  CHECK(t.out == ts.str());

  CliRun bad = run({"export-fol", "--mode", "bullet", "--format", "fof", "p0"});
  CHECK(bad.code == 2);
}

TEST_CASE("help and usage errors") {
  CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Frame files") != std::string::npos);

  CliRun nocmd = run({});
  CHECK(nocmd.code == 2);

  CliRun unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);

  CliRun badflag = run({"classify", "--frame", fixture("f1.frame"), "--bogus"});
  CHECK(badflag.code == 2);
}
