#include "qbracket/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "qbracket/errors.hpp"
#include "qbracket/parallel.hpp"
#include "qbracket/union_find.hpp"

namespace qbracket {

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw ValidationError("braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0)
      throw ValidationError("braid letter 0 is not a generator");
    if (std::abs(l) >= strands_)
      throw ValidationError("braid letter " + std::to_string(l) +
                            " out of range for " + std::to_string(strands_) +
                            " strands");
  }
}

int BraidWord::exponent_sum() const {
  int sum = 0;
  for (int l : letters_)
    sum += l > 0 ? 1 : -1;
  return sum;
}

std::string BraidWord::to_string() const {
  std::string out = "braid:" + std::to_string(strands_) + ":";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string_view trim(std::string_view s, std::size_t &offset) {
  offset = 0;
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

// Parses a signed decimal integer spanning exactly `field`.
int parse_int_field(std::string_view field, std::size_t pos) {
  if (field.empty())
    throw ParseError("expected an integer", pos);
  int value = 0;
  const char *first = field.data();
  if (*first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("malformed integer '" + std::string(field) + "'", pos);
  return value;
}

} // namespace

BraidWord parse_braid(std::string_view text) {
  std::size_t base = 0;
  text = trim(text, base);
  constexpr std::string_view prefix = "braid:";
  if (text.substr(0, prefix.size()) != prefix)
    throw ParseError("braid text must start with 'braid:'", base);
  std::size_t pos = prefix.size();
  const std::size_t colon = text.find(':', pos);
  if (colon == std::string_view::npos)
    throw ParseError("expected ':' after strand count", base + text.size());
  const int strands = parse_int_field(text.substr(pos, colon - pos), base + pos);
  if (strands < 1)
    throw ParseError("strand count must be at least 1", base + pos);

  std::vector<int> letters;
  pos = colon + 1;
  if (pos < text.size()) {
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::size_t end = comma == std::string_view::npos ? text.size() : comma;
      const int letter = parse_int_field(text.substr(pos, end - pos), base + pos);
      if (letter == 0)
        throw ParseError("braid letter 0 is not a generator", base + pos);
      if (std::abs(letter) >= strands)
        throw ParseError("letter " + std::to_string(letter) +
                             " out of range for " + std::to_string(strands) +
                             " strands",
                         base + pos);
      letters.push_back(letter);
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
  }
  return BraidWord(strands, std::move(letters));
}

int permutation_cycles(const BraidWord &b) {
  std::vector<int> perm(b.strands());
  std::iota(perm.begin(), perm.end(), 0);
  // perm[p] = strand currently at position p
  for (int l : b.letters()) {
    int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(b.strands(), false);
  int cycles = 0;
  for (int s = 0; s < b.strands(); ++s) {
    if (seen[s])
      continue;
    ++cycles;
    for (int p = s; !seen[p]; p = perm[p])
      seen[p] = true;
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Diagram

namespace {

struct Passage {
  int crossing;
  int entry; // slot index
  int exit;
};

} // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0)
    throw ValidationError("negative number of crossingless circles");
  if (crossings_.empty() && free_loops_ == 0)
    throw ValidationError("empty diagram");

  std::map<int, int> counts;
  for (const auto &x : crossings_)
    for (int label : x) {
      if (label <= 0)
        throw ValidationError("arc labels must be positive");
      ++counts[label];
    }
  std::map<int, int> dense_of;
  for (const auto &[label, n] : counts) {
    if (n != 2)
      throw ValidationError("arc label " + std::to_string(label) +
                            " appears " + std::to_string(n) +
                            " times; every label must appear exactly twice");
    const int id = static_cast<int>(dense_of.size());
    dense_of[label] = id;
  }
  arcs_ = static_cast<int>(dense_of.size());
  const int n = static_cast<int>(crossings_.size());
  dense_.resize(n);
  // occurrences[arc] = two (crossing, slot) positions
  std::vector<std::array<std::pair<int, int>, 2>> occ(arcs_);
  std::vector<int> filled(arcs_, 0);
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < 4; ++s) {
      const int id = dense_of[crossings_[k][s]];
      dense_[k][s] = id;
      occ[id][filled[id]++] = {k, s};
    }

  auto other_end = [&](int k, int s) {
    const int id = dense_[k][s];
    return occ[id][0] == std::pair{k, s} ? occ[id][1] : occ[id][0];
  };

  // visited[k][0] for the under passage (slots 0,2), [k][1] for the over one.
  std::vector<std::array<bool, 2>> visited(n, {false, false});
  signs_.assign(n, 0);
  int traced = 0;
  for (int k0 = 0; k0 < n; ++k0) {
    for (int strand = 0; strand < 2; ++strand) {
      if (visited[k0][strand])
        continue;
      ++traced;
      std::vector<Passage> path;
      int k = k0, entry = strand; // slot 0 or 1
      while (true) {
        const int exit = (entry + 2) % 4;
        path.push_back({k, entry, exit});
        visited[k][entry % 2] = true;
        auto [nk, ns] = other_end(k, exit);
        if (nk == k0 && ns == strand)
          break;
        if (visited[nk][ns % 2])
          throw ValidationError("inconsistent strand structure at crossing " +
                                std::to_string(nk + 1));
        k = nk;
        entry = ns;
      }

      bool has_under = false, forward_ok = true, reverse_ok = true;
      for (const auto &p : path) {
        if (p.entry % 2 != 0)
          continue;
        has_under = true;
        forward_ok = forward_ok && p.entry == 0;
        reverse_ok = reverse_ok && p.exit == 0;
      }
      bool forward;
      if (has_under) {
        if (forward_ok == reverse_ok)
          throw ValidationError(
              "orientation inference failed: under-strands disagree on "
              "direction along a component");
        forward = forward_ok;
      } else {
        // Labels increase along the component.
        int up = 0, down = 0;
        for (const auto &p : path) {
          const int in = crossings_[p.crossing][p.entry];
          const int out = crossings_[p.crossing][p.exit];
          if (out == in + 1)
            ++up;
          if (in == out + 1)
            ++down;
        }
        forward = up >= down;
      }
      for (const auto &p : path) {
        if (p.entry % 2 == 0)
          continue;
        const int entry_slot = forward ? p.entry : p.exit;
        signs_[p.crossing] = entry_slot == 3 ? +1 : -1;
      }
    }
  }
  components_ = traced + free_loops_;
}

int Diagram::writhe() const {
  return std::accumulate(signs_.begin(), signs_.end(), 0);
}

std::string Diagram::to_string() const {
  if (crossings_.empty() && free_loops_ == 1)
    return "PD[]";
  std::vector<Crossing> sorted = crossings_;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "PD[";
  bool first = true;
  for (const auto &x : sorted) {
    if (!first)
      out += ',';
    first = false;
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]) + "," + std::to_string(x[3]) + ")";
  }
  for (int i = 0; i < free_loops_; ++i) {
    if (!first)
      out += ',';
    first = false;
    out += 'O';
  }
  return out + "]";
}

Diagram parse_pd(std::string_view text) {
  std::size_t base = 0;
  text = trim(text, base);
  std::size_t pos = 0;
  auto fail = [&](const std::string &what) -> ParseError {
    return ParseError(what, base + pos);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && is_space(text[pos]))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  if (text.substr(0, 2) != "PD")
    throw fail("PD text must start with 'PD['");
  pos = 2;
  expect('[');
  std::vector<Crossing> crossings;
  int free_loops = 0;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == 'O') {
        ++pos;
        ++free_loops;
      } else {
        expect('X');
        expect('(');
        Crossing x{};
        for (int s = 0; s < 4; ++s) {
          skip_ws();
          const std::size_t start = pos;
          while (pos < text.size() &&
                 (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                  text[pos] == '-' || text[pos] == '+'))
            ++pos;
          x[s] = parse_int_field(text.substr(start, pos - start), base + start);
          if (s < 3)
            expect(',');
        }
        expect(')');
        crossings.push_back(x);
      }
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip_ws();
  if (pos != text.size())
    throw fail("trailing characters after PD code");
  if (crossings.empty() && free_loops == 0)
    free_loops = 1;
  return Diagram(std::move(crossings), free_loops);
}

Diagram closure(const BraidWord &b) {
  const int n = b.strands();
  int next_id = n;
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  // Raw arc ids; next_arc maps an arc entering a crossing to the arc leaving
  // it along the same strand.
  std::vector<Crossing> raw;
  std::map<int, int> next_arc;
  for (int letter : b.letters()) {
    const int i = std::abs(letter) - 1;
    const int in_left = cur[i], in_right = cur[i + 1];
    const int out_left = next_id++, out_right = next_id++;
    next_arc[in_left] = out_right;
    next_arc[in_right] = out_left;
    // Strands run upward. sigma_i: over-strand SW -> NE, under-strand
    // SE -> NW. Slots go counterclockwise from the incoming under-strand.
    if (letter > 0)
      raw.push_back({in_right, out_right, out_left, in_left});
    else
      raw.push_back({in_left, in_right, out_right, out_left});
    cur[i] = out_left;
    cur[i + 1] = out_right;
  }

  UnionFind uf(next_id);
  for (int p = 0; p < n; ++p)
    uf.unite(cur[p], p);

  // Each arc class that meets a crossing has exactly one id entering one.
  std::map<int, int> entering; // class -> entering id
  for (const auto &[in, out] : next_arc)
    entering[uf.find(in)] = in;

  std::map<int, int> label_of; // class -> label
  int label = 0;
  for (int id = 0; id < next_id; ++id) {
    int cls = uf.find(id);
    if (label_of.count(cls) || !entering.count(cls))
      continue;
    while (!label_of.count(cls)) {
      label_of[cls] = ++label;
      cls = uf.find(next_arc[entering[cls]]);
    }
  }

  std::vector<Crossing> crossings;
  crossings.reserve(raw.size());
  for (const auto &x : raw) {
    Crossing c{};
    for (int s = 0; s < 4; ++s)
      c[s] = label_of[uf.find(x[s])];
    crossings.push_back(c);
  }
  int free_loops = 0;
  std::vector<bool> seen(next_id, false);
  for (int id = 0; id < next_id; ++id) {
    const int cls = uf.find(id);
    if (seen[cls])
      continue;
    seen[cls] = true;
    if (!entering.count(cls))
      ++free_loops;
  }
  return Diagram(std::move(crossings), free_loops);
}

int writhe(const Diagram &d) { return d.writhe(); }
int writhe(const BraidWord &b) { return b.exponent_sum(); }

// ---------------------------------------------------------------------------
// States

int resolve_mask(const Diagram &d, std::uint64_t mask) {
  UnionFind uf(d.arc_count());
  const auto &slots = d.dense_slots();
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto &x = slots[k];
    if ((mask >> k) & 1u) {
      uf.unite(x[0], x[3]);
      uf.unite(x[1], x[2]);
    } else {
      uf.unite(x[0], x[1]);
      uf.unite(x[2], x[3]);
    }
  }
  return uf.classes() + d.free_loops();
}

int resolve_state(const Diagram &d, const State &s) {
  if (s.choices.size() != d.crossing_count())
    throw std::invalid_argument("state length does not match crossing count");
  UnionFind uf(d.arc_count());
  const auto &slots = d.dense_slots();
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto &x = slots[k];
    if (s.choices[k] == Smoothing::B) {
      uf.unite(x[0], x[3]);
      uf.unite(x[1], x[2]);
    } else {
      uf.unite(x[0], x[1]);
      uf.unite(x[2], x[3]);
    }
  }
  return uf.classes() + d.free_loops();
}

StateCensus state_census(const Diagram &d, int cap) {
  const int n = static_cast<int>(d.crossing_count());
  if (n > cap)
    throw CapacityError("diagram has " + std::to_string(n) +
                        " crossings, above the state enumeration cap of " +
                        std::to_string(cap) + "; use the braid/TL evaluator");
  const int max_loops = d.arc_count() + d.free_loops() + 1;
  StateCensus census;
  census.crossings = n;
  census.count.assign(n + 1, std::vector<std::uint64_t>(max_loops, 0));
  const std::uint64_t total = std::uint64_t{1} << n;

  const int chunks = static_cast<int>(
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(64)));
  std::vector<StateCensus> partial(chunks, census);
  parallel_for(chunks, [&](int c) {
    const std::uint64_t lo = total * c / chunks;
    const std::uint64_t hi = total * (c + 1) / chunks;
    auto &table = partial[c].count;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const int b = std::popcount(mask);
      table[n - b][resolve_mask(d, mask)] += 1;
    }
  });
  for (const auto &p : partial)
    for (int a = 0; a <= n; ++a)
      for (int l = 0; l < max_loops; ++l)
        census.count[a][l] += p.count[a][l];
  return census;
}

// ---------------------------------------------------------------------------
// Moves

std::uint32_t Lcg64::below(std::uint32_t n) {
  if (n == 0)
    return 0;
  const std::uint32_t limit = UINT32_MAX - UINT32_MAX % n;
  std::uint32_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

BraidWord rewrite_moves(const BraidWord &b, std::uint64_t seed, int count,
                        const MoveOptions &opts) {
  const int n = b.strands();
  if (count <= 0 || n < 2)
    return b;
  Lcg64 rng(seed);
  std::vector<int> w = b.letters();
  const std::uint32_t kinds = opts.conjugation ? 5 : 4;
  int applied = 0;
  while (applied < count) {
    const std::uint32_t kind = rng.below(kinds);
    const auto len = static_cast<std::uint32_t>(w.size());
    switch (kind) {
    case 0: { // RII insertion
      const auto at = rng.below(len + 1);
      const int gen = 1 + static_cast<int>(rng.below(n - 1));
      const int sign = rng.below(2) ? 1 : -1;
      w.insert(w.begin() + at, {sign * gen, -sign * gen});
      ++applied;
      break;
    }
    case 1: { // RII deletion
      if (len < 2)
        break;
      const auto at = rng.below(len - 1);
      if (w[at] == -w[at + 1]) {
        w.erase(w.begin() + at, w.begin() + at + 2);
        ++applied;
      }
      break;
    }
    case 2: { // RIII: x y x -> y x y
      if (len < 3)
        break;
      const auto at = rng.below(len - 2);
      const int x = w[at], y = w[at + 1], z = w[at + 2];
      if (x == z && (x > 0) == (y > 0) && std::abs(std::abs(x) - std::abs(y)) == 1) {
        w[at] = y;
        w[at + 1] = x;
        w[at + 2] = y;
        ++applied;
      }
      break;
    }
    case 3: { // distant generators commute
      if (len < 2)
        break;
      const auto at = rng.below(len - 1);
      if (std::abs(std::abs(w[at]) - std::abs(w[at + 1])) >= 2) {
        std::swap(w[at], w[at + 1]);
        ++applied;
      }
      break;
    }
    case 4: { // cyclic rotation
      if (len < 1)
        break;
      std::rotate(w.begin(), w.begin() + 1, w.end());
      ++applied;
      break;
    }
    }
  }
  return BraidWord(n, std::move(w));
}

BraidWord add_kink(const BraidWord &b, int sign) {
  std::vector<int> letters = b.letters();
  letters.push_back(sign >= 0 ? b.strands() : -b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

} // namespace qbracket
