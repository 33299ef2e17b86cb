#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qbracket/bracket3.hpp"
#include "qbracket/diagram.hpp"

namespace qbracket {

// A diagram given either as a braid word or as a PD code.
struct Presentation {
  std::variant<BraidWord, Diagram> value;
  std::string text; // canonical text

  bool is_braid() const { return std::holds_alternative<BraidWord>(value); }
  Diagram diagram() const;
  int writhe() const;
  std::size_t crossing_count() const;
};

// Dispatches on the "braid:" / "PD[" prefix.
Presentation parse_presentation(std::string_view text);

struct TableEntry {
  std::string name;
  Presentation presentation;
  int crossings = 0; // table crossing number, or the diagram's crossing count
};

struct TableError {
  int line = 0;
  std::string message;
};

struct Table {
  std::vector<TableEntry> entries;
  std::vector<TableError> errors;
};

// Lines are "name<TAB>presentation[<TAB>crossing number]"; blank lines and
// lines starting with '#' are ignored. Throws std::runtime_error if the file
// cannot be read.
Table load_table(const std::filesystem::path &path);
Table parse_table(std::istream &in);

// Identifies the conventions that cached values depend on.
const std::string &convention_fingerprint();

struct InvariantRecord {
  std::string name;
  std::string presentation;
  int writhe = 0;
  std::string bracket;    // classical bracket, Laurent text
  std::string f;          // classical f-invariant, Laurent text
  std::string bracket3;   // normal form of the raw bracket
  std::string ambient3;
  std::string engine;
  std::string fingerprint;
  // specialize_classical(bracket3) == (-a^-2 - a^2) * bracket
  bool specialization_ok = false;

  bool operator==(const InvariantRecord &) const = default;
};

InvariantRecord compute_record(const TableEntry &entry, Engine engine);

std::string record_to_json(const InvariantRecord &r);
// Throws on malformed input.
InvariantRecord record_from_json(const std::string &line);

// Line-oriented JSON cache keyed by (name, presentation, fingerprint). Corrupt
// lines are skipped and listed in warnings(). Writes are appended through a
// single mutex-guarded stream.
class InvariantCache {
public:
  explicit InvariantCache(std::filesystem::path path);

  std::optional<InvariantRecord> lookup(const std::string &name,
                                        const std::string &presentation,
                                        const std::string &fingerprint) const;
  void store(const InvariantRecord &record);

  std::size_t size() const;
  const std::vector<std::string> &warnings() const { return warnings_; }

private:
  static std::string key(const std::string &name,
                         const std::string &presentation,
                         const std::string &fingerprint);

  std::filesystem::path path_;
  std::map<std::string, InvariantRecord> records_;
  std::vector<std::string> warnings_;
  mutable std::mutex mutex_;
};

// Groups entry names by exact f-invariant text.
std::map<std::string, std::vector<std::string>>
bucket_by_classical(const std::vector<InvariantRecord> &records);

enum class Verdict { same, different, unconfirmed };
std::string verdict_name(Verdict v);

struct Comparison {
  std::string name1, name2;
  std::string bucket_digest;
  Verdict verdict = Verdict::same;
  std::string engines;
};

struct ScanOptions {
  Engine engine = Engine::tl;
  int max_crossings = -1; // negative: no limit
  InvariantCache *cache = nullptr;
};

struct ScanReport {
  std::vector<InvariantRecord> records; // sorted by name
  std::vector<Comparison> comparisons;
  std::vector<TableError> errors;
  std::size_t buckets = 0;
  std::size_t cache_hits = 0;
  std::size_t computed = 0;
  std::size_t witnesses() const;
  std::size_t specialization_failures() const;
};

ScanReport conjecture_scan(const std::vector<TableEntry> &entries,
                           const ScanOptions &opts = {});

// Output formats. None of them include timings, so equal inputs give
// byte-identical output.
void write_report_text(std::ostream &out, const ScanReport &r,
                       const ScanOptions &opts);
void write_report_csv(std::ostream &out, const ScanReport &r);
void write_report_json(std::ostream &out, const ScanReport &r,
                       const ScanOptions &opts);

// 64-bit FNV-1a, hex encoded; used only for display.
std::string digest(const std::string &text);

} // namespace qbracket
