#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "plumb/cli.hpp"

using namespace plumb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(std::vector<std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  f << body;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("lens prints the chain in every format") {
  Run r = run({"lens", "27", "8", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "chain: -4 -2 -3 -2\n");
  CHECK(r.err.empty());

  CHECK(run({"lens", "27", "19", "--format", "text"}).out ==
        "chain: -2 -2 -4 -3\n");

  // json is the default format
  r = run({"lens", "27", "8"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"format":"plumbing-graph/v1","vertices":[)"
        R"({"id":0,"genus":0,"euler":-4,"arrows":0},)"
        R"({"id":1,"genus":0,"euler":-2,"arrows":0},)"
        R"({"id":2,"genus":0,"euler":-3,"arrows":0},)"
        R"({"id":3,"genus":0,"euler":-2,"arrows":0}],)"
        R"("edges":[[0,1],[1,2],[2,3]]})"
        "\n");
  CHECK(r.out == run({"lens", "27", "8", "--format", "json"}).out);
}

TEST_CASE("domain errors exit 1 and write only to stderr") {
  Run r = run({"lens", "4", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err == "InvalidParams: p and q must be coprime, got (4,2)\n");

  r = run({"monodromy", "lens:5,2"});
  CHECK(r.code == 1);
  CHECK(r.err == "NotTautClass: graph is not a cusp cycle\n");

  r = run({"bnp", "definitely_missing.json"});
  CHECK(r.code == 1);
  CHECK(r.err == "BadFormat: cannot read 'definitely_missing.json'\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"lens", "27"}).code == 2);
  CHECK(run({"lens", "5", "2", "--format", "yaml"}).code == 2);
  CHECK(run({"survey-lens", "--pmax", "1"}).code == 2);
  CHECK(run({"reverse"}).code == 2);
  CHECK(run({"reverse", "--lens", "5", "2", "--cusp", "cusp:3,3"}).code == 2);
  CHECK(run({"blowup", "lens:5,2", "--edge", "0,1", "--vertex", "0"}).code ==
        2);

  Run r = run({"bnp", "lens:5,2", "--format", "dot"});
  CHECK(r.code == 2);
  CHECK(r.err == "usage error: --format dot is not supported for bnp\n");
  CHECK(r.out.empty());
}

TEST_CASE("help exits 0") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("plumbcalc") != std::string::npos);
}

TEST_CASE("contfrac expands a fraction") {
  Run r = run({"contfrac", "27", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"p":27,"q":8,"terms":[4,2,3,2]})"
                 "\n");
}

TEST_CASE("compare reports the verdict pair") {
  Run r = run({"compare", "lens:27,8", "lens:27,19"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"topology":"UnorientedHomeoOnly","bilipschitz":"BilipschitzDistinct",)"
        R"("witness":"match after orientation reversal"})"
        "\n");
}

TEST_CASE("monodromy prints the matrix") {
  Run r = run({"monodromy", "cusp:4,2,5,2,2,3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"matrix":[[182,-79],[53,-23]],"trace":159,"trace_condition":true})"
        "\n");

  r = run({"monodromy", "cusp:4,2,5,2,2,3", "--format", "text"});
  CHECK(r.out ==
        "matrix: 182 -79 / 53 -23\n"
        "trace: 159\n"
        "trace_condition: true\n");
}

TEST_CASE("reverse flips orientation for both families") {
  Run r = run({"reverse", "--lens", "5", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"p":5,"q":3})"
                 "\n");

  r = run({"reverse", "--cusp", "cusp:4,2,5,2,2,3", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "cycle: -2 -2 -4 -2 -3 -5\n");

  // words with no reversal in the family are domain errors, not crashes
  r = run({"reverse", "--cusp", "cusp:3,2"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("Unrepresentable:", 0) == 0);
}

TEST_CASE("fundamental-cycle emits a divisor") {
  Run r = run({"fundamental-cycle", "lens:27,8"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"format":"divisor/v1","coefficients":)"
                 R"({"0":1,"1":1,"2":1,"3":1}})"
                 "\n");
  CHECK(run({"fundamental-cycle", "lens:27,8", "--format", "text"}).out ==
        "0 1\n1 1\n2 1\n3 1\n");
}

TEST_CASE("arrows emits the curvette counts") {
  Run r = run({"arrows", "lens:27,8"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"format":"divisor/v1","coefficients":)"
                 R"({"0":3,"1":0,"2":1,"3":1}})"
                 "\n");
  CHECK(run({"arrows", "lens:27,8", "--format", "text"}).out ==
        "0 3\n1 0\n2 1\n3 1\n");
}

TEST_CASE("bnp prints the descriptor") {
  Run r = run({"bnp", "lens:27,8", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "L(3) S(2) L(1) S(3/2) L(1)\n");

  r = run({"bnp", "lens:27,8"});
  CHECK(r.out ==
        R"({"format":"bnp-descriptor/v1","shape":"chain","l_nodes":[)"
        R"({"vertex":0,"euler":-4,"valency":1,"curvettes":3},)"
        R"({"vertex":2,"euler":-3,"valency":2,"curvettes":1},)"
        R"({"vertex":3,"euler":-2,"valency":1,"curvettes":1}],)"
        R"("strings":[{"n":1,"inner_rate":"2"},{"n":0,"inner_rate":"3/2"}]})"
        "\n");
}

TEST_CASE("pitilde prints the modified resolution") {
  Run r = run({"pitilde", "lens:27,8", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "chain: -4 -2 -4 -1 -3\n"
        "central: 1 4\n");

  r = run({"pitilde", "lens:27,8"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == "pitilde/v1");
  CHECK(j["graph"]["format"] == "plumbing-graph/v1");
  CHECK(j["l_nodes"] == nlohmann::json({0, 2, 3}));
  CHECK(j["central_vertices"] == nlohmann::json({1, 4}));
  CHECK(j["strings"][0]["interior"] == nlohmann::json({1}));
}

TEST_CASE("cusp-check recognizes cycles") {
  Run r = run({"cusp-check", "cusp:4,2,5,2,2,3"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"is_cusp":true,"word":[4,2,5,2,2,3]})"
                 "\n");

  const char* path = "cli_all2_cycle.json";
  write_file(path,
             R"({"format":"plumbing-graph/v1","vertices":[)"
             R"({"id":0,"euler":-2},{"id":1,"euler":-2},{"id":2,"euler":-2}],)"
             R"("edges":[[0,1],[1,2],[2,0]]})");
  r = run({"cusp-check", path});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"is_cusp":false})"
                 "\n");
  std::remove(path);
}

TEST_CASE("blowup and blowdown round trip through files") {
  Run up = run({"blowup", "lens:5,2", "--edge", "0,1", "--format", "text"});
  CHECK(up.code == 0);
  CHECK(up.out == "chain: -4 -1 -3\n");

  CHECK(run({"blowup", "lens:5,2", "--vertex", "1", "--format", "text"}).out ==
        "chain: -3 -3 -1\n");

  up = run({"blowup", "lens:5,2", "--edge", "0,1"});
  const char* path = "cli_blown_up.json";
  write_file(path, up.out);
  Run down = run({"blowdown", path, "--vertex", "2"});
  CHECK(down.code == 0);
  CHECK(down.out == run({"lens", "5", "2"}).out);
  std::remove(path);

  Run r = run({"blowdown", "cusp:3,2", "--vertex", "0"});
  CHECK(r.code == 1);
  CHECK(r.err ==
        "NotBlowDownable: vertex 0 is not a genus-zero arrowless -1 vertex\n");

  CHECK(run({"blowdown", "lens:5,2", "--vertex", "9"}).code == 1);
  r = run({"blowup", "lens:5,2", "--edge", "0,3"});
  CHECK(r.code == 1);
  CHECK(r.err == "NoSuchSite: no edge {0,3}\n");
}

TEST_CASE("graphs load from files as well as inline constructors") {
  const char* path = "cli_lens_input.json";
  write_file(path, run({"lens", "27", "8"}).out);
  CHECK(run({"bnp", path}).out == run({"bnp", "lens:27,8"}).out);
  std::remove(path);

  CHECK(run({"bnp", "lens:27"}).code == 1);
  CHECK(run({"bnp", "cusp:3,x"}).code == 1);
}

TEST_CASE("surveys report clean scans") {
  Run r = run({"survey-lens", "--pmax", "30"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["pairs_scanned"] == 139);
  CHECK(j["oriented_homeo"] == 8);
  CHECK(j["counterexamples"].empty());

  r = run({"survey-cusp", "--kmax", "4", "--bmax", "4"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["pairs_scanned"] == 34);
  CHECK(j["skipped_unrepresentable"] == 3);
  CHECK(j["ok"] == true);
}

TEST_CASE("survey verbose notes go to stderr only") {
  Run quiet = run({"survey-cusp", "--kmax", "6", "--bmax", "5"});
  Run loud = run({"survey-cusp", "--kmax", "6", "--bmax", "5", "--verbose"});
  CHECK(quiet.err.empty());
  CHECK(loud.out == quiet.out);
  CHECK(loud.err.find("same rates, distinct:") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (std::initializer_list<std::string> args :
       {std::initializer_list<std::string>{"survey-cusp", "--kmax", "5",
                                           "--bmax", "4"},
        {"bnp", "cusp:4,2,5,2,2,3"},
        {"pitilde", "cusp:4,2,5,2,2,3"}}) {
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

}  // TEST_SUITE
