#include "qbracket/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "qbracket/bracket3.hpp"
#include "qbracket/classical.hpp"
#include "qbracket/quotient.hpp"
#include "qbracket/search.hpp"

namespace qbracket {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 7;
constexpr int kDefaultCases = 200;

struct Flags {
  std::string input;
  std::string engine = "auto";
  std::string verify_target;
  std::string table;
  std::string cache;
  std::uint64_t seed = kDefaultSeed;
  int cases = kDefaultCases;
  double tol = 1e-9;
  int max_crossings = -1;
  bool json = false;
  bool csv = false;
};

// ---------------------------------------------------------------------------
// bracket

int cmd_bracket(const Flags &flags, std::ostream &out) {
  const Presentation p = parse_presentation(flags.input);
  const Diagram d = p.diagram();
  const LaurentPolynomial bracket = kauffman_bracket(d);
  const LaurentPolynomial f = normalize_writhe(bracket, d.writhe());
  if (flags.json) {
    out << json{{"input", p.text},
                {"writhe", d.writhe()},
                {"bracket", bracket.to_string()},
                {"f", f.to_string()}}
               .dump()
        << '\n';
  } else {
    out << "input: " << p.text << '\n'
        << "writhe: " << d.writhe() << '\n'
        << "bracket: " << bracket.to_string() << '\n'
        << "f: " << f.to_string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bracket3

struct Bracket3Values {
  Polynomial raw;
  std::string engine;
};

Bracket3Values raw_for(const Presentation &p, const std::string &engine) {
  if (engine == "tl") {
    if (!p.is_braid())
      throw std::invalid_argument("the tl engine needs a braid presentation");
    return {tl_evaluate(std::get<BraidWord>(p.value)), "tl"};
  }
  return {bracket3_raw(p.diagram()), "naive"};
}

int cmd_bracket3(const Flags &flags, std::ostream &out, std::ostream &err) {
  const Presentation p = parse_presentation(flags.input);
  const int w = p.writhe();
  std::string engine = flags.engine;
  if (engine == "auto")
    engine = p.is_braid() ? "tl" : "naive";

  Bracket3Values values;
  bool engines_agree = true;
  if (engine == "both") {
    Bracket3Values naive = raw_for(p, "naive");
    Bracket3Values tl = raw_for(p, "tl");
    engines_agree = naive.raw == tl.raw;
    values = {tl.raw, "both"};
    if (!engines_agree)
      err << "engine mismatch: naive " << naive.raw.to_string() << " vs tl "
          << tl.raw.to_string() << '\n';
  } else {
    values = raw_for(p, engine);
  }
  const NormalForm nf = normal_form(values.raw);
  const NormalForm amb = ambient3_from_raw(values.raw, w);
  const NormalForm displayed = ambient3_displayed_from_raw(values.raw, w);
  if (flags.json) {
    json j = {{"input", p.text},
              {"writhe", w},
              {"raw", values.raw.to_string()},
              {"bracket3", nf.to_string()},
              {"ambient3", amb.to_string()},
              {"ambient3_displayed_factors", displayed.to_string()},
              {"engine", values.engine}};
    if (engine == "both")
      j["engines_agree"] = engines_agree;
    out << j.dump() << '\n';
  } else {
    out << "input: " << p.text << '\n'
        << "writhe: " << w << '\n'
        << "raw: " << values.raw.to_string() << '\n'
        << "bracket3: " << nf.to_string() << '\n'
        << "ambient3: " << amb.to_string() << '\n'
        << "ambient3 (displayed factors): " << displayed.to_string() << '\n'
        << "engine: " << values.engine << '\n';
    if (engine == "both")
      out << "engines agree: " << (engines_agree ? "yes" : "no") << '\n';
  }
  return engines_agree ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// verify

int emit(std::ostream &out, const json &j) {
  out << j.dump() << '\n';
  return j.value("pass", true) ? 0 : 1;
}

int verify_groebner_cmd(std::ostream &out) {
  const GroebnerReport report = verify_groebner();
  int failures = 0;
  for (const auto &c : report.checks) {
    json j = {{"check", c.check}, {"pass", c.pass}, {"detail", c.detail}};
    if (!c.witnesses.empty())
      j["witness"] = c.witnesses;
    failures += emit(out, j);
  }
  return failures ? kExitVerificationFailed : kExitOk;
}

int verify_variety_cmd(const Flags &flags, std::ostream &out) {
  const auto &raw = raw_branches();
  const auto distinct = branches();
  int failures = 0;
  json dups = json::array();
  for (const auto &b : raw) {
    auto first = std::find_if(distinct.begin(), distinct.end(), [&](const auto &k) {
      return same_branch(k, b);
    });
    if (first != distinct.end() && first->index != b.index)
      dups.push_back({{"entry", b.index},
                      {"label", b.label},
                      {"same_as", first->label},
                      {"same_as_entry", first->index}});
  }
  std::set<std::string> labels;
  for (const auto &b : raw)
    labels.insert(b.label);
  emit(out, {{"check", "branch_count"},
             {"pass", true},
             {"listed", raw.size()},
             {"distinct_labels", labels.size()},
             {"distinct_values", distinct.size()},
             {"duplicates", dups}});
  for (const auto &b : distinct) {
    const BranchReport r = verify_branch(b, 4, flags.tol);
    json j = {{"check", "branch"},
              {"pass", r.pass},
              {"label", r.label},
              {"entry", r.index},
              {"assignment", b.to_string()},
              {"residuals", {{"p1", r.max_residual_p1}, {"p2", r.max_residual_p2}}},
              {"samples", r.evaluated}};
    if (!r.skipped.empty())
      j["skipped_samples"] = r.skipped;
    failures += emit(out, j);
  }
  return failures ? kExitVerificationFailed : kExitOk;
}

struct BaseWord {
  std::string name;
  BraidWord word;
};

std::vector<BaseWord> move_bases() {
  return {{"unknot", parse_braid("braid:3:1,-2")},
          {"hopf", parse_braid("braid:3:1,1,2")},
          {"trefoil", parse_braid("braid:3:1,1,1,2")},
          {"figure_eight", parse_braid("braid:3:1,-2,1,-2")}};
}

std::uint64_t variant_seed(std::uint64_t seed, int k) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k) + 1;
}

int verify_moves_cmd(const Flags &flags, std::ostream &out) {
  const Engine engine = flags.engine == "naive" ? Engine::naive : Engine::tl;
  emit(out, {{"check", "config"},
             {"pass", true},
             {"seed", flags.seed},
             {"cases", flags.cases},
             {"engine", engine_name(engine)}});
  int failures = 0;
  for (const bool conjugation : {false, true}) {
    for (const auto &base : move_bases()) {
      const NormalForm expected = bracket3(base.word, engine);
      int mismatches = 0;
      json witness;
      for (int k = 0; k < flags.cases; ++k) {
        const BraidWord v = rewrite_moves(base.word, variant_seed(flags.seed, k),
                                          1 + k % 25, {conjugation});
        if (bracket3(v, engine) != expected) {
          if (mismatches++ == 0)
            witness = v.to_string();
        }
      }
      json j = {{"check", conjugation ? "conjugation" : "regular_isotopy"},
                {"pass", mismatches == 0},
                {"base", base.name},
                {"word", base.word.to_string()},
                {"variants", flags.cases},
                {"mismatches", mismatches}};
      if (mismatches)
        j["witness"] = witness;
      failures += emit(out, j);
    }
  }

  // Writhe-changing presentations of one knot must agree on ambient3.
  const std::vector<std::pair<std::string, std::vector<std::string>>> families = {
      {"unknot",
       {"braid:1:", "braid:2:1", "braid:2:-1", "braid:3:1,2", "braid:3:-1,-2"}},
      {"trefoil", {"braid:2:1,1,1", "braid:3:1,1,1,2"}}};
  for (const auto &[name, words] : families) {
    std::set<std::string> values;
    json writhes = json::array();
    for (const auto &w : words) {
      const BraidWord b = parse_braid(w);
      values.insert(ambient3(b, engine).to_string());
      writhes.push_back(b.exponent_sum());
    }
    failures += emit(out, {{"check", "ambient_isotopy"},
                           {"pass", values.size() == 1},
                           {"knot", name},
                           {"writhes", writhes},
                           {"distinct_values", values.size()}});
  }
  return failures ? kExitVerificationFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const Flags &flags, std::ostream &out, std::ostream &err) {
  const Table table = load_table(flags.table);
  for (const auto &e : table.errors)
    err << flags.table << ":" << e.line << ": " << e.message << '\n';
  std::optional<InvariantCache> cache;
  if (!flags.cache.empty()) {
    cache.emplace(flags.cache);
    for (const auto &w : cache->warnings())
      err << "warning: " << w << '\n';
  }
  ScanOptions opts;
  opts.engine = flags.engine == "naive" ? Engine::naive : Engine::tl;
  opts.max_crossings = flags.max_crossings;
  opts.cache = cache ? &*cache : nullptr;
  const ScanReport report = conjecture_scan(table.entries, opts);
  if (flags.json)
    write_report_json(out, report, opts);
  else if (flags.csv)
    write_report_csv(out, report);
  else
    write_report_text(out, report, opts);
  err << "computed " << report.computed << ", cache hits " << report.cache_hits
      << '\n';
  for (const auto &e : report.errors)
    err << "error: " << e.message << '\n';

  const bool unconfirmed = std::any_of(
      report.comparisons.begin(), report.comparisons.end(),
      [](const Comparison &c) { return c.verdict == Verdict::unconfirmed; });
  if (!table.errors.empty() || !report.errors.empty())
    return kExitError;
  if (unconfirmed || report.specialization_failures() > 0)
    return kExitVerificationFailed;
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Kauffman bracket and quotient-ring bracket invariants",
               "qbracket"};
  app.require_subcommand(1);
  Flags flags;
  const std::set<std::string> engines{"naive", "tl", "both", "auto"};

  auto *bracket = app.add_subcommand("bracket", "classical bracket and f-invariant");
  bracket->add_option("input", flags.input, "braid:<n>:<letters> or PD[...]")
      ->required();
  bracket->add_flag("--json", flags.json, "emit JSON");

  auto *b3 = app.add_subcommand("bracket3", "three-variable bracket modulo the ideal");
  b3->add_option("input", flags.input, "braid:<n>:<letters> or PD[...]")
      ->required();
  b3->add_flag("--json", flags.json, "emit JSON");
  b3->add_option("--engine", flags.engine, "naive|tl|both (default: tl for braids)")
      ->check(CLI::IsMember(engines));

  auto *verify = app.add_subcommand("verify", "verification reports (JSON lines)");
  verify->add_option("target", flags.verify_target, "groebner|variety|moves")
      ->required()
      ->check(CLI::IsMember({"groebner", "variety", "moves"}));
  verify->add_option("--seed", flags.seed, "rewrite seed")
      ->default_val(kDefaultSeed);
  verify->add_option("--cases", flags.cases, "rewritten variants per base word")
      ->default_val(kDefaultCases)
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", flags.tol, "branch residual tolerance")
      ->default_val(1e-9)
      ->check(CLI::PositiveNumber);
  verify->add_option("--engine", flags.engine, "naive|tl")
      ->check(CLI::IsMember(engines));
  verify->add_flag("--json", flags.json, "accepted for uniformity; output is JSON");

  auto *search = app.add_subcommand("search", "conjecture scan over a knot table");
  search->add_option("--table", flags.table, "table file")->required();
  search->add_option("--max-crossings", flags.max_crossings, "crossing limit");
  search->add_option("--cache", flags.cache, "JSON-lines invariant cache");
  search->add_option("--engine", flags.engine, "naive|tl")
      ->check(CLI::IsMember(engines));
  auto *json_flag = search->add_flag("--json", flags.json, "emit JSON");
  auto *csv_flag = search->add_flag("--csv", flags.csv, "emit CSV");
  json_flag->excludes(csv_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (bracket->parsed())
      return cmd_bracket(flags, out);
    if (b3->parsed())
      return cmd_bracket3(flags, out, err);
    if (verify->parsed()) {
      if (flags.verify_target == "groebner")
        return verify_groebner_cmd(out);
      if (flags.verify_target == "variety")
        return verify_variety_cmd(flags, out);
      return verify_moves_cmd(flags, out);
    }
    if (search->parsed())
      return cmd_search(flags, out, err);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace qbracket
