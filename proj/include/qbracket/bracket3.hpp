#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbracket/diagram.hpp"
#include "qbracket/multipoly.hpp"
#include "qbracket/quotient.hpp"

namespace qbracket {

enum class Engine { naive, tl };

std::string engine_name(Engine e);
Engine parse_engine(const std::string &name);

// Unnormalized three-variable state sum: alpha^a beta^b delta^loops over all
// states (a crossingless k-circle diagram evaluates to delta^k).
Polynomial bracket3_raw(const Diagram &d, int cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Temperley-Lieb evaluation

// Planar matching on 2n boundary points of an n-strand tangle: bottom points
// are 0..n-1, top points n..2n-1, and entry j holds the partner of point j.
using Matching = std::vector<std::uint8_t>;
using TLVector = std::map<Matching, Polynomial>;

inline constexpr int kDefaultStrandCap = 12;

Matching tl_identity(int strands);
// Cup-cap between strands i and i+1 (0-based i).
Matching tl_cupcap(int strands, int i);
bool is_planar(const Matching &m);
// Loops formed when the matching is closed like a braid.
int tl_closure_loops(const Matching &m);

struct TLOptions {
  int strand_cap = kDefaultStrandCap;
  // Normal-form every coefficient after each letter.
  bool reduce_early = false;
};

// The word as a combination of planar matchings, with one delta per closed
// loop created while composing.
TLVector tl_expand(const BraidWord &b, const TLOptions &opts = {});

// Raw bracket of the closure; equals bracket3_raw(closure(b)).
Polynomial tl_evaluate(const BraidWord &b, int strand_cap = kDefaultStrandCap);

// normal_form of the raw bracket, with coefficients reduced after every
// letter to bound growth.
NormalForm tl_normal_form(const BraidWord &b,
                          int strand_cap = kDefaultStrandCap);

// ---------------------------------------------------------------------------
// Invariants

Polynomial raw_bracket(const BraidWord &b, Engine engine);

NormalForm bracket3(const Diagram &d);
NormalForm bracket3(const BraidWord &b, Engine engine = Engine::tl);

// Closed-diagram multipliers for one added kink of each sign, derived from
// the state sum: raw(add_kink(b, s)) == factor(s) * raw(b).
struct CurlFactors {
  Polynomial f_plus;
  Polynomial f_minus;
  const Polynomial &factor(int sign) const {
    return sign >= 0 ? f_plus : f_minus;
  }
};

const CurlFactors &curl_factors();

// normal_form(f_opp^|w| * raw) where f_opp is the curl factor of the sign
// opposite to the writhe.
NormalForm ambient3_from_raw(const Polynomial &raw, int writhe);
NormalForm ambient3(const Diagram &d);
NormalForm ambient3(const BraidWord &b, Engine engine = Engine::tl);

// The normalization with the displayed factors a*d^2 + b*d (w >= 0) and
// b*d^2 + a*d (w < 0), which carry one extra delta per kink. Reported next
// to ambient3 for comparison.
NormalForm ambient3_displayed_from_raw(const Polynomial &raw, int writhe);

} // namespace qbracket
