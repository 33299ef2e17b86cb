#include "doctest.h"
#include "helpers.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbracket/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = qbracket::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Set QBRACKET_UPDATE_GOLDEN=1 to rewrite the files after a deliberate change.
void check_golden(const std::string &name, const std::string &actual) {
  const std::string path = std::string(QBRACKET_GOLDEN_DIR) + "/" + name;
  if (std::getenv("QBRACKET_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream expected;
  expected << in.rdbuf();
  CHECK(actual == expected.str());
}

const std::string kTrefoilPd = "PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]";

} // namespace

TEST_CASE("golden outputs") {
  struct Case {
    std::string golden;
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {"bracket_trefoil.txt", {"bracket", "braid:2:1,1,1"}, 0},
      {"bracket_figure_eight.json", {"bracket", "braid:3:1,-2,1,-2", "--json"}, 0},
      {"bracket_pd.txt", {"bracket", kTrefoilPd}, 0},
      {"bracket3_trefoil.txt", {"bracket3", "braid:2:1,1,1"}, 0},
      {"bracket3_both.txt", {"bracket3", "braid:3:1,-2,1,-2", "--engine", "both"}, 0},
      {"bracket3_pd.json", {"bracket3", kTrefoilPd, "--json"}, 0},
      {"bracket3_unknot_kink.json", {"bracket3", "braid:2:-1", "--json", "--engine", "naive"}, 0},
      {"verify_groebner.jsonl", {"verify", "groebner"}, 0},
      {"verify_variety.jsonl", {"verify", "variety"}, 0},
      {"verify_moves.jsonl", {"verify", "moves", "--seed", "11", "--cases", "20"}, 0},
      {"search_le9.txt", {"search", "--table", data_path("knots_le9.tsv")}, 0},
      {"search_10.csv", {"search", "--table", data_path("knots_10.tsv"), "--csv"}, 0},
      {"search_extra.json", {"search", "--table", data_path("extra.tsv"), "--json",
                             "--engine", "naive"}, 0},
  };
  for (const auto &c : cases) {
    CAPTURE(c.golden);
    const Outcome o = run_cli(c.args);
    CHECK(o.code == c.code);
    check_golden(c.golden, o.out);
    // Identical inputs give identical bytes.
    CHECK(run_cli(c.args).out == o.out);
  }
}

TEST_CASE("usage errors exit 64") {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"bracket"}, {"bracket", "braid:1:", "--bogus"},
           {"verify", "everything"}, {"bracket3", "braid:1:", "--engine", "fast"},
           {"search"}, {"search", "--table", "x", "--json", "--csv"}}) {
    const Outcome o = run_cli(args);
    CAPTURE(args.size());
    CHECK(o.code == qbracket::kExitUsage);
    CHECK(o.out.empty());
    CHECK(o.err.find("Usage") != std::string::npos);
  }
}

TEST_CASE("help exits 0") {
  const Outcome o = run_cli({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("bracket3") != std::string::npos);
}

TEST_CASE("computation errors exit 1") {
  CHECK(run_cli({"bracket", "braid:2:3"}).code == qbracket::kExitError);
  CHECK(run_cli({"bracket", "PD[X(1,2,3,4)]"}).code == qbracket::kExitError);
  const Outcome tl_pd = run_cli({"bracket3", kTrefoilPd, "--engine", "tl"});
  CHECK(tl_pd.code == qbracket::kExitError);
  CHECK(tl_pd.err.find("braid") != std::string::npos);
  CHECK(run_cli({"search", "--table", "/nonexistent.tsv"}).code == qbracket::kExitError);
}

TEST_CASE("the seed is printed in the moves header") {
  const Outcome o = run_cli({"verify", "moves", "--cases", "1"});
  const auto header = nlohmann::json::parse(o.out.substr(0, o.out.find('\n')));
  CHECK(header["seed"] == 7);
  CHECK(header["cases"] == 1);
}

TEST_CASE("thread cap does not change results") {
  const auto args = std::vector<std::string>{"search", "--table", data_path("knots_le9.tsv")};
  const std::string many = run_cli(args).out;
  setenv("QBRACKET_THREADS", "1", 1);
  const std::string one = run_cli(args).out;
  unsetenv("QBRACKET_THREADS");
  CHECK(one == many);
}
