#include "doctest.h"
#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbracket/errors.hpp"

using namespace qbracket;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string &name) {
  const fs::path p = fs::temp_directory_path() / ("qbracket_test_" + name);
  fs::remove(p);
  return p;
}

std::string text_report(const ScanReport &r, const ScanOptions &o) {
  std::ostringstream s;
  write_report_text(s, r, o);
  return s.str();
}

std::vector<TableEntry> small_table() {
  std::istringstream in("3_1\tbraid:2:1,1,1\t3\n"
                        "4_1\tbraid:3:1,-2,1,-2\t4\n"
                        "11n_34\tbraid:4:-1,-1,2,-1,2,-1,3,-2,-2,3,3\t11\n"
                        "11n_42\tbraid:4:-1,-1,-1,-1,2,2,1,-3,2,2,-3,2,-3\t11\n");
  return parse_table(in).entries;
}

} // namespace

TEST_CASE("presentations") {
  CHECK(parse_presentation("braid:2:1,1,1").is_braid());
  CHECK_FALSE(parse_presentation("PD[X(1,1,2,2)]").is_braid());
  CHECK(parse_presentation("  braid:2:1").text == "braid:2:1");
  CHECK(parse_presentation("braid:3:1,-2").crossing_count() == 2);
  CHECK_THROWS_AS(parse_presentation("knot"), ParseError);
}

TEST_CASE("table parsing") {
  std::istringstream in("# header\n"
                        "\n"
                        "a\tbraid:2:1,1,1\n"
                        "b\tbraid:2:1,1,1\t3\r\n"
                        "a\tbraid:1:\n"
                        "c\tnot-a-knot\n"
                        "d\n"
                        "e\tbraid:2:1\t1\textra\n");
  const Table t = parse_table(in);
  REQUIRE(t.entries.size() == 2);
  CHECK(t.entries[0].crossings == 3);
  CHECK(t.entries[1].crossings == 3);
  REQUIRE(t.errors.size() == 4);
  CHECK(t.errors[0].line == 5);
  CHECK(t.errors[0].message.find("duplicate") != std::string::npos);
  CHECK(t.errors[1].line == 6);
  CHECK(t.errors[2].line == 7);
  CHECK(t.errors[3].line == 8);
  CHECK_THROWS_AS(load_table("/nonexistent/table.tsv"), std::runtime_error);
}

TEST_CASE("bundled tables load cleanly") {
  for (const auto &file : {"knots_le9.tsv", "knots_le8_pd.tsv", "knots_10.tsv",
                           "extra.tsv"}) {
    const Table t = load_table(data_path(file));
    CAPTURE(file);
    CHECK(t.errors.empty());
    CHECK_FALSE(t.entries.empty());
  }
  CHECK(load_table(data_path("knots_le9.tsv")).entries.size() == 85);
}

TEST_CASE("records round-trip through JSON") {
  const InvariantRecord r = compute_record(small_table()[0], Engine::tl);
  CHECK(r.specialization_ok);
  CHECK(r.engine == "tl");
  CHECK(r.writhe == 3);
  CHECK(record_from_json(record_to_json(r)) == r);
  CHECK_THROWS(record_from_json("{\"name\": 1}"));
  const InvariantRecord n = compute_record(small_table()[0], Engine::naive);
  CHECK(n.ambient3 == r.ambient3);
  CHECK(n.engine == "naive");
}

TEST_CASE("cache stores, reloads and skips corrupt lines") {
  const fs::path path = temp_file("cache.jsonl");
  const auto entries = small_table();
  {
    InvariantCache cache(path);
    CHECK(cache.size() == 0);
    ScanOptions o;
    o.cache = &cache;
    const ScanReport r = conjecture_scan({entries[0], entries[1]}, o);
    CHECK(r.computed == 2);
    CHECK(cache.size() == 2);
  }
  {
    std::ofstream(path, std::ios::app) << "{not json\n";
  }
  InvariantCache cache(path);
  CHECK(cache.size() == 2);
  CHECK(cache.warnings().size() == 1);
  ScanOptions o;
  o.cache = &cache;
  const ScanReport r = conjecture_scan(entries, o);
  CHECK(r.cache_hits == 2);
  CHECK(r.computed == 2);
  CHECK(cache.size() == 4);
  CHECK_FALSE(cache.lookup("3_1", "braid:2:1,1,1", "other-fingerprint"));
  fs::remove(path);
}

TEST_CASE("scan is deterministic and finds the Conway-style pair") {
  const auto entries = small_table();
  ScanOptions o;
  const ScanReport a = conjecture_scan(entries, o);
  auto reversed = entries;
  std::reverse(reversed.begin(), reversed.end());
  const ScanReport b = conjecture_scan(reversed, o);
  CHECK(text_report(a, o) == text_report(b, o));
  REQUIRE(a.comparisons.size() == 1);
  CHECK(a.comparisons[0].name1 == "11n_34");
  CHECK(a.comparisons[0].name2 == "11n_42");
  CHECK(a.comparisons[0].verdict == Verdict::same);
  CHECK(a.witnesses() == 0);
  CHECK(a.specialization_failures() == 0);
  CHECK(text_report(a, o).find("# result: no pair separated") != std::string::npos);

  o.max_crossings = 4;
  CHECK(conjecture_scan(entries, o).records.size() == 2);
}

TEST_CASE("report formats") {
  const auto entries = small_table();
  ScanOptions o;
  const ScanReport r = conjecture_scan(entries, o);
  std::ostringstream csv, js;
  write_report_csv(csv, r);
  CHECK(csv.str().starts_with("name1,name2,bucket,verdict,engines\n11n_34,11n_42,"));
  write_report_json(js, r, o);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["entries"] == 4);
  CHECK(j["comparisons"][0]["verdict"] == "SAME");
  CHECK(digest("") == "cbf29ce484222325");
}

TEST_CASE("bucket differences must reproduce with the other engine") {
  const auto entries = small_table();
  const fs::path path = temp_file("tamper.jsonl");
  {
    InvariantCache cache(path);
    for (const auto &e : entries) {
      InvariantRecord r = compute_record(e, Engine::tl);
      if (r.name == "11n_42")
        r.ambient3 = "+d"; // corrupted value: the recomputation disagrees
      if (r.name == "3_1" || r.name == "4_1")
        r.f = "shared"; // genuinely different knots forced into one bucket
      cache.store(r);
    }
  }
  InvariantCache cache(path);
  ScanOptions o;
  o.cache = &cache;
  const ScanReport r = conjecture_scan(entries, o);
  REQUIRE(r.comparisons.size() == 2);
  std::map<std::string, Verdict> verdicts;
  for (const auto &c : r.comparisons)
    verdicts[c.name1 + "/" + c.name2] = c.verdict;
  CHECK(verdicts.at("11n_34/11n_42") == Verdict::unconfirmed);
  CHECK(verdicts.at("3_1/4_1") == Verdict::different);
  CHECK(r.witnesses() == 1);
  CHECK(text_report(r, o).find("!!! WITNESS CANDIDATE: 3_1 and 4_1") !=
        std::string::npos);
  fs::remove(path);
}

TEST_CASE("failing entries are reported, not fatal") {
  std::istringstream in("big\tbraid:2:" + std::string("1") +
                        [] {
                          std::string s;
                          for (int i = 0; i < 30; ++i)
                            s += ",1";
                          return s;
                        }() +
                        "\n3_1\tbraid:2:1,1,1\n");
  const Table t = parse_table(in);
  REQUIRE(t.entries.size() == 2);
  const ScanReport r = conjecture_scan(t.entries, {Engine::naive});
  CHECK(r.records.size() == 1);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].message.starts_with("big: "));
}
