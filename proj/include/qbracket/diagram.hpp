#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qbracket {

// Braid word on `strands` strands; letter +i is sigma_i, -i its inverse.
class BraidWord {
public:
  BraidWord() = default;
  // Throws ValidationError if a letter is zero or |letter| >= strands.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int> &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  int exponent_sum() const;

  // "braid:<n>:<letters>"
  std::string to_string() const;

  bool operator==(const BraidWord &) const = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

BraidWord parse_braid(std::string_view text);

// Number of cycles of the permutation underlying the word.
int permutation_cycles(const BraidWord &b);

// PD crossing X(a, b, c, d): slots listed counterclockwise starting from the
// incoming under-strand, so the under-strand runs a -> c.
using Crossing = std::array<int, 4>;

enum class Smoothing : std::uint8_t { A, B };

// A link diagram in planar-diagram form plus a number of crossingless circles.
// Construction validates arc labels and infers an orientation.
class Diagram {
public:
  // Empty diagram: the crossingless unknot.
  Diagram() = default;
  Diagram(std::vector<Crossing> crossings, int free_loops);

  const std::vector<Crossing> &crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }
  int components() const { return components_; }
  // +1/-1 per crossing by the right-hand rule.
  const std::vector<int> &signs() const { return signs_; }
  int writhe() const;

  // Canonical text: crossings sorted lexicographically; crossingless circles
  // appear as "O" entries, except that the single-circle unknot is "PD[]".
  std::string to_string() const;

  // Arc labels mapped to 0..2n-1 in each crossing slot.
  const std::vector<std::array<int, 4>> &dense_slots() const {
    return dense_;
  }
  int arc_count() const { return arcs_; }

private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<int, 4>> dense_;
  std::vector<int> signs_;
  int free_loops_ = 1;
  int components_ = 1;
  int arcs_ = 0;
};

// Grammar: PD[X(a,b,c,d),...] with optional "O" entries for crossingless
// circles. "PD[]" is the one-circle unknot.
Diagram parse_pd(std::string_view text);

// Braid closure; arc labels increase along each component.
Diagram closure(const BraidWord &b);

int writhe(const Diagram &d);
int writhe(const BraidWord &b);

struct State {
  std::vector<Smoothing> choices;
};

// Loop count after smoothing every crossing as chosen. For X(a,b,c,d) the
// A-smoothing joins a-b and c-d, the B-smoothing joins a-d and b-c. On a braid
// closure this makes A the identity tangle for sigma_i and the cup-cap for
// sigma_i^-1.
int resolve_state(const Diagram &d, const State &s);

// Loop count for the state whose bit k selects B at crossing k.
int resolve_mask(const Diagram &d, std::uint64_t mask);

// Histogram of states: count[a][loops] over all 2^n states, where a is the
// number of A-smoothings. Throws CapacityError above `cap` crossings.
struct StateCensus {
  int crossings = 0;
  std::vector<std::vector<std::uint64_t>> count; // [a][loops]
};

inline constexpr int kDefaultEnumerationCap = 24;

StateCensus state_census(const Diagram &d, int cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Moves

// 64-bit linear congruential generator (Knuth's MMIX constants); the high 32
// bits of each state are the output.
class Lcg64 {
public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint32_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  // Uniform in [0, n) by rejection.
  std::uint32_t below(std::uint32_t n);

private:
  std::uint64_t state_;
};

struct MoveOptions {
  // Also draw cyclic rotations of the word (conjugation).
  bool conjugation = false;
};

// Applies `count` random regular-isotopy rewrites: insertion or deletion of
// sigma_i^e sigma_i^-e, the braid relation for same-sign triples, and
// commutation of distant generators.
BraidWord rewrite_moves(const BraidWord &b, std::uint64_t seed, int count,
                        const MoveOptions &opts = {});

// Markov stabilization: appends letter sign*n on n+1 strands.
BraidWord add_kink(const BraidWord &b, int sign);

} // namespace qbracket
