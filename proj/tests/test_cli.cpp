#include "doctest.h"

#include "cstar/cli.hpp"

using cstar::InputDocument;
using cstar::Json;
using cstar::ParseError;
using cstar::RunOptions;
using cstar::RunResult;
using cstar::UsageError;

namespace {

RunResult run(const std::string& cmd, const std::string& input,
              RunOptions opt = {}) {
  const InputDocument doc = cstar::parse_input(input);
  return cstar::run_subcommand(cmd, &doc, opt);
}

const char* kSingle = R"({"kind":"moduli","genus":0,"k":2,"chains":[[3]]})";
const char* kValid = R"({"kind":"moduli","genus":0,"k":1,"chains":[[2]]})";
const char* kBoundary =
    R"({"kind":"moduli","genus":0,"k":1,"chains":[[2],[2]]})";

}  // namespace

TEST_CASE("input parsing accepts the three kinds") {
  const auto m = cstar::parse_input(kSingle);
  CHECK(m.kind == InputDocument::Kind::Moduli);
  CHECK(m.moduli->k == 2);
  CHECK(m.moduli->chains == std::vector<cstar::Chain>{cstar::Chain{3}});

  const auto s = cstar::parse_input(
      R"({"kind":"stargraph","genus":1,"center_weight":-2,"chains":[[2,2]]})");
  CHECK(s.kind == InputDocument::Kind::Star);
  CHECK(s.star->genus == 1);
  CHECK(s.star->center_weight == -2);

  const auto b = cstar::parse_input(R"({"kind":"bamboo","weights":[-2,0,2]})");
  CHECK(b.kind == InputDocument::Kind::Bamboo);
  CHECK(b.bamboo->weights == std::vector<std::int64_t>{-2, 0, 2});
}

TEST_CASE("input parsing rejects malformed documents") {
  CHECK_THROWS_AS(cstar::parse_input("nonsense"), ParseError);
  CHECK_THROWS_AS(cstar::parse_input("[1,2]"), ParseError);
  CHECK_THROWS_AS(cstar::parse_input(R"({"genus":0})"), ParseError);
  CHECK_THROWS_AS(cstar::parse_input(R"({"kind":"widget"})"), ParseError);
  CHECK_THROWS_WITH_AS(
      cstar::parse_input(
          R"({"kind":"moduli","genus":0,"k":1,"chains":[[2]],"extra":1})"),
      "unknown field \"extra\"", ParseError);
  CHECK_THROWS_WITH_AS(
      cstar::parse_input(R"({"kind":"moduli","genus":0,"k":1.5,"chains":[]})"),
      "field \"k\" must be an integer", ParseError);
  CHECK_THROWS_WITH_AS(
      cstar::parse_input(
          R"({"kind":"moduli","genus":0,"k":1,"chains":[["2"]]})"),
      "chain entries must be integers", ParseError);
  CHECK_THROWS_AS(cstar::parse_input(R"({"kind":"moduli","genus":0,"k":1})"),
                  ParseError);
  CHECK_THROWS_WITH_AS(cstar::parse_input(R"({"kind":"bamboo","weights":[]})"),
                       "weights must be non-empty", ParseError);
  // range violations surface from the constructors
  CHECK_THROWS_WITH_AS(
      cstar::parse_input(R"({"kind":"moduli","genus":0,"k":1,"chains":[[1]]})"),
      "chain entry must be >= 2", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      cstar::parse_input(R"({"kind":"moduli","genus":0,"k":0,"chains":[]})"),
      "k must be >= 1", std::invalid_argument);
}

TEST_CASE("validate: golden text and exit codes") {
  const auto ok = run("validate", kValid);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output ==
        "genus: 0\n"
        "k: 1\n"
        "s: 1\n"
        "chains: (2)\n"
        "sum = 1/2 < 1: VALID\n");
  const auto bad = run("validate", kBoundary);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output ==
        "genus: 0\n"
        "k: 1\n"
        "s: 2\n"
        "chains: (2) (2)\n"
        "sum = 1 >= 1: INVALID\n");
}

TEST_CASE("validate: golden json") {
  RunOptions opt;
  opt.json = true;
  const auto ok = run("validate", kValid, opt);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output ==
        "{\n"
        "  \"genus\": 0,\n"
        "  \"k\": 1,\n"
        "  \"s\": 1,\n"
        "  \"chains\": [\n"
        "    [\n"
        "      2\n"
        "    ]\n"
        "  ],\n"
        "  \"sum\": \"1/2\",\n"
        "  \"valid\": true\n"
        "}\n");
}

TEST_CASE("matrix: star and model parts") {
  const auto star = run(
      "matrix", R"({"kind":"stargraph","genus":0,"center_weight":-1,"chains":[[2]]})");
  CHECK(star.exit_code == 0);
  CHECK(star.output ==
        "-1  1\n"
        " 1 -2\n");
  RunOptions d0;
  d0.part = "D0";
  CHECK(run("matrix", kSingle, d0).output ==
        "-2  1\n"
        " 1 -3\n");
  RunOptions dinf;
  dinf.part = "Dinf";
  CHECK(run("matrix", kSingle, dinf).output ==
        "1  1  0\n"
        "1 -2  1\n"
        "0  1 -2\n");
  const auto full = run("matrix", kSingle);
  CHECK(full.output ==
        "-2  1  0  0  0 0\n"
        " 1 -3  1  0  0 0\n"
        " 0  1 -1  1  0 0\n"
        " 0  0  1 -2  1 0\n"
        " 0  0  0  1 -2 1\n"
        " 0  0  0  0  1 1\n");
  RunOptions j;
  j.json = true;
  j.part = "D0";
  const Json parsed = Json::parse(run("matrix", kSingle, j).output);
  CHECK(parsed["size"] == 2);
  CHECK(parsed["matrix"] == Json::parse("[[-2,1],[1,-3]]"));
  RunOptions bogus;
  bogus.part = "D9";
  CHECK_THROWS_AS(run("matrix", kSingle, bogus), UsageError);
  CHECK_THROWS_AS(
      run("matrix",
          R"({"kind":"stargraph","genus":0,"center_weight":-1,"chains":[]})",
          d0),
      UsageError);
}

TEST_CASE("diag: verdict drives the exit code") {
  const auto bad = run("diag", kBoundary);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output ==
        "pivots: -2 -2 0\n"
        "negative definite: no\n");
  const auto ok = run("diag", kValid);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output ==
        "pivots: -2 -1/2\n"
        "negative definite: yes\n");
}

TEST_CASE("dual, model and cs-check output") {
  CHECK(run("dual", kSingle).output == "(3) -> (2,2)\n");
  CHECK(run("model", kSingle).output ==
        "genus: 0\n"
        "k: 2\n"
        "s: 1\n"
        "sigma0 weight: -2\n"
        "sigmainf weight: 1\n"
        "bamboo 1: k-chain (3), l-chain (2,2)\n"
        "vertices: 6\n");
  const auto cs = run("cs-check", kSingle);
  CHECK(cs.exit_code == 0);
  CHECK(cs.output ==
        "p1_1 on c1_1: -3\n"
        "p1_1 on e1: -1/3\n"
        "q1_1 on t1_1: -2\n"
        "q1_1 on t1_2: -1/2\n"
        "q1_2 on t1_2: -3/2\n"
        "q1_2 on e1: -2/3\n"
        "index check: PASS\n");
}

TEST_CASE("trace: moduli history and bamboo contraction") {
  CHECK(run("trace", kSingle).output ==
        "(-2,0,2)\n"
        "(-2,-1,-1,1)\n"
        "(-2,-2,-1,-2,1)\n"
        "(-2,-3,-1,-2,-2,1)\n");
  // two chains: blocks separated by a blank line
  CHECK(run("trace",
            R"({"kind":"moduli","genus":0,"k":1,"chains":[[2],[2]]})")
            .output ==
        "(-1,0,1)\n"
        "(-1,-1,-1,0)\n"
        "(-1,-2,-1,-2,0)\n"
        "\n"
        "(-1,0,1)\n"
        "(-1,-1,-1,0)\n"
        "(-1,-2,-1,-2,0)\n");
  const auto contact =
      run("trace", R"({"kind":"bamboo","weights":[-1,-2,-1,-2,0]})");
  CHECK(contact.exit_code == 0);
  CHECK(contact.output ==
        "(-1,-2,-1,-2,0)\n"
        "(-1,-1,-1,0)\n"
        "(-1,0,1)\n"
        "k = 1\n");
  const auto stuck =
      run("trace", R"({"kind":"bamboo","weights":[-1,-2,-2,0]})");
  CHECK(stuck.exit_code == 1);
  CHECK(stuck.output ==
        "(-1,-2,-2,0)\n"
        "stuck\n");
}

TEST_CASE("ample: certificate and refutation") {
  const auto found = run("ample", kValid);
  CHECK(found.exit_code == 0);
  CHECK(found.output ==
        "certificate: found\n"
        "a = 5\n"
        "chain 1: 2\n"
        "verified: yes\n");
  const auto none = run("ample", kBoundary);
  CHECK(none.exit_code == 1);
  CHECK(none.output ==
        "certificate: none (conditions fail)\n"
        "bounded search: none (searched <= 12)\n");
}

TEST_CASE("equiv: golden text") {
  const auto r = run("equiv", kSingle);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "cond1 ample certificate: yes (a = 10)\n"
        "cond2 negative definite: yes\n"
        "cond3 outward sum: 1/3 < 2: yes\n"
        "cond4 dual sum: 2/3 > -1: yes\n"
        "center pivot: -5/3\n"
        "reversed-order sum: 1/3 (valid: yes)\n"
        "agreement: yes\n");
  const auto b = run("equiv", kBoundary);
  CHECK(b.exit_code == 0);  // all four conditions agree on "false"
  CHECK(b.output ==
        "cond1 ample certificate: no (bounded search <= 12: none)\n"
        "cond2 negative definite: no\n"
        "cond3 outward sum: 1 >= 1: no\n"
        "cond4 dual sum: 1 <= 1: no\n"
        "center pivot: 0\n"
        "reversed-order sum: 1 (valid: no)\n"
        "agreement: yes\n");
}

TEST_CASE("dot passthrough") {
  const auto r = run(
      "dot", R"({"kind":"stargraph","genus":0,"center_weight":-1,"chains":[[2]]})");
  CHECK(r.exit_code == 0);
  CHECK(r.output.substr(0, 11) == "graph star ");
}

TEST_CASE("enumerate: golden text at tiny bounds") {
  RunOptions opt;
  opt.enum_bounds = cstar::EnumerationBounds{1, 1, 1, 2, 12};
  const auto r = cstar::run_subcommand("enumerate", nullptr, opt);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "bounds: k <= 1, s <= 1, n <= 1, w <= 2, search <= 12\n"
        "instances: 2\n"
        "valid: 2\n"
        "invalid: 0\n"
        "certificates: 2\n"
        "refutations: 0\n"
        "cond3 reversal mismatches: 0\n"
        "disagreements: 0\n");
}

TEST_CASE("subcommand and kind mismatches") {
  const InputDocument bam =
      cstar::parse_input(R"({"kind":"bamboo","weights":[-1,0,1]})");
  CHECK_THROWS_AS(cstar::run_subcommand("validate", &bam, {}), UsageError);
  CHECK_THROWS_AS(cstar::run_subcommand("dual", &bam, {}), UsageError);
  CHECK_THROWS_AS(cstar::run_subcommand("frobnicate", &bam, {}), UsageError);
  CHECK_THROWS_AS(cstar::run_subcommand("validate", nullptr, {}), UsageError);
  const InputDocument md = cstar::parse_input(kValid);
  CHECK_THROWS_AS(cstar::run_subcommand("enumerate", &md, {}), UsageError);
}
