#include "qbracket/search.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qbracket/classical.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/parallel.hpp"

namespace qbracket {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Presentations and tables

Diagram Presentation::diagram() const {
  if (const auto *b = std::get_if<BraidWord>(&value))
    return closure(*b);
  return std::get<Diagram>(value);
}

int Presentation::writhe() const {
  if (const auto *b = std::get_if<BraidWord>(&value))
    return b->exponent_sum();
  return std::get<Diagram>(value).writhe();
}

std::size_t Presentation::crossing_count() const {
  if (const auto *b = std::get_if<BraidWord>(&value))
    return b->length();
  return std::get<Diagram>(value).crossing_count();
}

Presentation parse_presentation(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start])))
    ++start;
  const std::string_view body = text.substr(start);
  if (body.rfind("braid:", 0) == 0) {
    BraidWord b = parse_braid(text);
    std::string canonical = b.to_string();
    return {std::move(b), std::move(canonical)};
  }
  if (body.rfind("PD", 0) == 0) {
    Diagram d = parse_pd(text);
    std::string canonical = d.to_string();
    return {std::move(d), std::move(canonical)};
  }
  throw ParseError("expected a 'braid:' or 'PD[' presentation", start);
}

Table parse_table(std::istream &in) {
  Table table;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, '\t');)
      fields.push_back(f);
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      table.errors.push_back(
          {lineno, "expected name<TAB>presentation[<TAB>crossings]"});
      continue;
    }
    if (!names.insert(fields[0]).second) {
      table.errors.push_back({lineno, "duplicate name '" + fields[0] + "'"});
      continue;
    }
    try {
      TableEntry entry{fields[0], parse_presentation(fields[1]), 0};
      entry.crossings = fields.size() == 3
                            ? std::stoi(fields[2])
                            : static_cast<int>(entry.presentation.crossing_count());
      table.entries.push_back(std::move(entry));
    } catch (const std::exception &e) {
      table.errors.push_back({lineno, e.what()});
    }
  }
  return table;
}

Table load_table(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read table '" + path.string() + "'");
  return parse_table(in);
}

// ---------------------------------------------------------------------------
// Records

const std::string &convention_fingerprint() {
  static const std::string fp =
      "qbracket/1;smoothing=A-identity-on-positive-generator;"
      "raw=delta^loops;curl=delta-free;order=lex(a>b>d);basis=q1,q2,q3";
  return fp;
}

InvariantRecord compute_record(const TableEntry &entry, Engine engine) {
  const Presentation &p = entry.presentation;
  const Diagram d = p.diagram();
  InvariantRecord r;
  r.name = entry.name;
  r.presentation = p.text;
  r.writhe = d.writhe();
  const LaurentPolynomial classical = kauffman_bracket(d);
  r.bracket = classical.to_string();
  r.f = normalize_writhe(classical, r.writhe).to_string();
  const bool use_tl = engine == Engine::tl && p.is_braid();
  const Polynomial raw = use_tl ? tl_evaluate(std::get<BraidWord>(p.value))
                                : bracket3_raw(d);
  const NormalForm nf = normal_form(raw);
  r.bracket3 = nf.to_string();
  r.ambient3 = ambient3_from_raw(raw, r.writhe).to_string();
  r.engine = use_tl ? "tl" : "naive";
  r.fingerprint = convention_fingerprint();
  r.specialization_ok =
      specialize_classical(nf.representative) == classical_loop() * classical;
  return r;
}

std::string record_to_json(const InvariantRecord &r) {
  json j = {{"name", r.name},
            {"presentation", r.presentation},
            {"writhe", r.writhe},
            {"bracket", r.bracket},
            {"f", r.f},
            {"bracket3", r.bracket3},
            {"ambient3", r.ambient3},
            {"engine", r.engine},
            {"fingerprint", r.fingerprint},
            {"specialization_ok", r.specialization_ok}};
  return j.dump();
}

InvariantRecord record_from_json(const std::string &line) {
  const json j = json::parse(line);
  InvariantRecord r;
  r.name = j.at("name").get<std::string>();
  r.presentation = j.at("presentation").get<std::string>();
  r.writhe = j.at("writhe").get<int>();
  r.bracket = j.at("bracket").get<std::string>();
  r.f = j.at("f").get<std::string>();
  r.bracket3 = j.at("bracket3").get<std::string>();
  r.ambient3 = j.at("ambient3").get<std::string>();
  r.engine = j.at("engine").get<std::string>();
  r.fingerprint = j.at("fingerprint").get<std::string>();
  r.specialization_ok = j.at("specialization_ok").get<bool>();
  return r;
}

// ---------------------------------------------------------------------------
// Cache

InvariantCache::InvariantCache(std::filesystem::path path)
    : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in)
    return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    try {
      InvariantRecord r = record_from_json(line);
      records_[key(r.name, r.presentation, r.fingerprint)] = std::move(r);
    } catch (const std::exception &e) {
      warnings_.push_back(path_.string() + ":" + std::to_string(lineno) +
                          ": skipped corrupt cache line (" + e.what() + ")");
    }
  }
}

std::string InvariantCache::key(const std::string &name,
                                const std::string &presentation,
                                const std::string &fingerprint) {
  return name + '\x1f' + presentation + '\x1f' + fingerprint;
}

std::optional<InvariantRecord>
InvariantCache::lookup(const std::string &name, const std::string &presentation,
                       const std::string &fingerprint) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(key(name, presentation, fingerprint));
  if (it == records_.end())
    return std::nullopt;
  return it->second;
}

void InvariantCache::store(const InvariantRecord &record) {
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  if (!out)
    throw std::runtime_error("cannot write cache '" + path_.string() + "'");
  out << record_to_json(record) << '\n';
  records_[key(record.name, record.presentation, record.fingerprint)] = record;
}

std::size_t InvariantCache::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

// ---------------------------------------------------------------------------
// Scan

std::map<std::string, std::vector<std::string>>
bucket_by_classical(const std::vector<InvariantRecord> &records) {
  std::map<std::string, std::vector<std::string>> buckets;
  for (const auto &r : records)
    buckets[r.f].push_back(r.name);
  for (auto &[key, names] : buckets)
    std::sort(names.begin(), names.end());
  return buckets;
}

std::string verdict_name(Verdict v) {
  switch (v) {
  case Verdict::same:
    return "SAME";
  case Verdict::different:
    return "DIFFERENT";
  case Verdict::unconfirmed:
    return "UNCONFIRMED";
  }
  return "?";
}

std::string digest(const std::string &text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::size_t ScanReport::witnesses() const {
  return static_cast<std::size_t>(
      std::count_if(comparisons.begin(), comparisons.end(),
                    [](const Comparison &c) { return c.verdict == Verdict::different; }));
}

std::size_t ScanReport::specialization_failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [](const InvariantRecord &r) { return !r.specialization_ok; }));
}

namespace {

Engine alternate(Engine e) { return e == Engine::tl ? Engine::naive : Engine::tl; }

} // namespace

ScanReport conjecture_scan(const std::vector<TableEntry> &entries,
                           const ScanOptions &opts) {
  std::vector<const TableEntry *> selected;
  for (const auto &e : entries)
    if (opts.max_crossings < 0 || e.crossings <= opts.max_crossings)
      selected.push_back(&e);
  std::sort(selected.begin(), selected.end(),
            [](const TableEntry *x, const TableEntry *y) { return x->name < y->name; });

  ScanReport report;
  const int n = static_cast<int>(selected.size());
  std::vector<std::optional<InvariantRecord>> records(n);
  std::vector<bool> from_cache(n, false);
  std::vector<std::string> failures(n);
  parallel_for(n, [&](int i) {
    const TableEntry &e = *selected[i];
    if (opts.cache) {
      if (auto hit = opts.cache->lookup(e.name, e.presentation.text,
                                        convention_fingerprint())) {
        records[i] = std::move(hit);
        from_cache[i] = true;
        return;
      }
    }
    try {
      records[i] = compute_record(e, opts.engine);
    } catch (const std::exception &ex) {
      failures[i] = ex.what();
    }
  });

  std::map<std::string, const TableEntry *> by_name;
  for (int i = 0; i < n; ++i) {
    if (!records[i]) {
      report.errors.push_back({0, selected[i]->name + ": " + failures[i]});
      continue;
    }
    if (from_cache[i]) {
      ++report.cache_hits;
    } else {
      ++report.computed;
      if (opts.cache)
        opts.cache->store(*records[i]);
    }
    by_name[records[i]->name] = selected[i];
    report.records.push_back(*records[i]);
  }

  const auto buckets = bucket_by_classical(report.records);
  report.buckets = buckets.size();
  std::map<std::string, const InvariantRecord *> record_of;
  for (const auto &r : report.records)
    record_of[r.name] = &r;

  for (const auto &[key, names] : buckets) {
    if (names.size() < 2)
      continue;
    const std::string bucket = digest(key);
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        const InvariantRecord &x = *record_of[names[i]];
        const InvariantRecord &y = *record_of[names[j]];
        Comparison c{x.name, y.name, bucket, Verdict::same,
                     x.engine == y.engine ? x.engine : x.engine + "/" + y.engine};
        if (x.ambient3 != y.ambient3) {
          // Recompute both sides with the other engine before reporting.
          const Engine second = alternate(opts.engine);
          const InvariantRecord rx = compute_record(*by_name[x.name], second);
          const InvariantRecord ry = compute_record(*by_name[y.name], second);
          const bool reproduced = rx.ambient3 == x.ambient3 &&
                                  ry.ambient3 == y.ambient3 &&
                                  rx.ambient3 != ry.ambient3;
          c.verdict = reproduced ? Verdict::different : Verdict::unconfirmed;
          c.engines += "+" + rx.engine;
          if (rx.engine != ry.engine)
            c.engines += "/" + ry.engine;
        }
        report.comparisons.push_back(std::move(c));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Output

namespace {

void write_summary_lines(std::ostream &out, const ScanReport &r,
                         const ScanOptions &opts) {
  out << "# entries: " << r.records.size() << "\n";
  out << "# buckets: " << r.buckets << "\n";
  out << "# comparisons: " << r.comparisons.size() << "\n";
  out << "# witnesses: " << r.witnesses() << "\n";
  out << "# specialization failures: " << r.specialization_failures() << "\n";
  out << "# errors: " << r.errors.size() << "\n";
  out << "# engine: " << engine_name(opts.engine) << "\n";
  out << "# max crossings: "
      << (opts.max_crossings < 0 ? std::string("none")
                                 : std::to_string(opts.max_crossings))
      << "\n";
  out << "# fingerprint: " << convention_fingerprint() << "\n";
}

} // namespace

void write_report_text(std::ostream &out, const ScanReport &r,
                       const ScanOptions &opts) {
  write_summary_lines(out, r, opts);
  for (const auto &e : r.errors)
    out << "# error: " << e.message << "\n";
  out << "name1\tname2\tbucket\tverdict\tengines\n";
  for (const auto &c : r.comparisons) {
    out << c.name1 << '\t' << c.name2 << '\t' << c.bucket_digest << '\t'
        << verdict_name(c.verdict) << '\t' << c.engines << '\n';
    if (c.verdict == Verdict::different)
      out << "!!! WITNESS CANDIDATE: " << c.name1 << " and " << c.name2
          << " share the classical invariant but differ in ambient3\n";
  }
  if (r.witnesses() == 0)
    out << "# result: no pair separated by ambient3 within any classical bucket\n";
}

void write_report_csv(std::ostream &out, const ScanReport &r) {
  out << "name1,name2,bucket,verdict,engines\n";
  for (const auto &c : r.comparisons)
    out << c.name1 << ',' << c.name2 << ',' << c.bucket_digest << ','
        << verdict_name(c.verdict) << ',' << c.engines << '\n';
}

void write_report_json(std::ostream &out, const ScanReport &r,
                       const ScanOptions &opts) {
  json rows = json::array();
  for (const auto &c : r.comparisons)
    rows.push_back({{"name1", c.name1},
                    {"name2", c.name2},
                    {"bucket", c.bucket_digest},
                    {"verdict", verdict_name(c.verdict)},
                    {"engines", c.engines}});
  json errors = json::array();
  for (const auto &e : r.errors)
    errors.push_back(e.message);
  json j = {{"entries", r.records.size()},
            {"buckets", r.buckets},
            {"comparisons", rows},
            {"witnesses", r.witnesses()},
            {"specialization_failures", r.specialization_failures()},
            {"errors", errors},
            {"engine", engine_name(opts.engine)},
            {"max_crossings", opts.max_crossings},
            {"fingerprint", convention_fingerprint()}};
  out << j.dump(2) << '\n';
}

} // namespace qbracket
