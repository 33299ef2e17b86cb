#include "qbracket/bracket3.hpp"

#include <numeric>
#include <stdexcept>

#include "qbracket/errors.hpp"
#include "qbracket/union_find.hpp"

namespace qbracket {

std::string engine_name(Engine e) { return e == Engine::naive ? "naive" : "tl"; }

Engine parse_engine(const std::string &name) {
  if (name == "naive")
    return Engine::naive;
  if (name == "tl")
    return Engine::tl;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

Polynomial bracket3_raw(const Diagram &d, int cap) {
  const StateCensus census = state_census(d, cap);
  const auto n = static_cast<std::uint32_t>(census.crossings);
  std::vector<Term> terms;
  for (std::uint32_t a = 0; a <= n; ++a)
    for (std::size_t l = 0; l < census.count[a].size(); ++l)
      if (census.count[a][l] != 0)
        terms.push_back({Monomial{a, n - a, static_cast<std::uint32_t>(l)},
                         Integer(census.count[a][l])});
  return Polynomial::from_terms(terms);
}

// ---------------------------------------------------------------------------
// Temperley-Lieb

Matching tl_identity(int strands) {
  Matching m(2 * strands);
  for (int j = 0; j < strands; ++j) {
    m[j] = static_cast<std::uint8_t>(strands + j);
    m[strands + j] = static_cast<std::uint8_t>(j);
  }
  return m;
}

Matching tl_cupcap(int strands, int i) {
  Matching m = tl_identity(strands);
  m[i] = static_cast<std::uint8_t>(i + 1);
  m[i + 1] = static_cast<std::uint8_t>(i);
  m[strands + i] = static_cast<std::uint8_t>(strands + i + 1);
  m[strands + i + 1] = static_cast<std::uint8_t>(strands + i);
  return m;
}

bool is_planar(const Matching &m) {
  // Boundary points in cyclic order: bottom left to right, then top right to
  // left. A matching is planar iff no two chords interleave in that order.
  const int n = static_cast<int>(m.size()) / 2;
  auto cyc = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
  for (int p = 0; p < 2 * n; ++p) {
    if (m[m[p]] != p || m[p] == p)
      return false;
    const int a = std::min(cyc(p), cyc(m[p])), b = std::max(cyc(p), cyc(m[p]));
    for (int q = 0; q < 2 * n; ++q) {
      const int c = cyc(q), d = cyc(m[q]);
      const bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in && c != a && c != b && d != a && d != b)
        return false;
    }
  }
  return true;
}

int tl_closure_loops(const Matching &m) {
  const int n = static_cast<int>(m.size()) / 2;
  UnionFind uf(2 * n);
  for (int p = 0; p < 2 * n; ++p)
    uf.unite(p, m[p]);
  for (int j = 0; j < n; ++j)
    uf.unite(j, n + j);
  return uf.classes();
}

namespace {

// Stacks a cup-cap on top of m at strands (i, i+1). Returns the number of
// closed loops created (0 or 1).
int stack_cupcap(Matching &m, int i) {
  const int n = static_cast<int>(m.size()) / 2;
  const int t1 = n + i, t2 = n + i + 1;
  if (m[t1] == t2)
    return 1;
  const int p = m[t1], q = m[t2];
  m[p] = static_cast<std::uint8_t>(q);
  m[q] = static_cast<std::uint8_t>(p);
  m[t1] = static_cast<std::uint8_t>(t2);
  m[t2] = static_cast<std::uint8_t>(t1);
  return 0;
}

void add_into(TLVector &v, Matching m, const Polynomial &c) {
  auto [it, inserted] = v.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      v.erase(it);
  }
}

const Monomial kAlpha{1, 0, 0};
const Monomial kBeta{0, 1, 0};
const Monomial kDelta{0, 0, 1};

} // namespace

TLVector tl_expand(const BraidWord &b, const TLOptions &opts) {
  const int n = b.strands();
  if (n > opts.strand_cap)
    throw CapacityError("braid has " + std::to_string(n) +
                        " strands, above the TL strand cap of " +
                        std::to_string(opts.strand_cap));
  TLVector v;
  v.emplace(tl_identity(n), Polynomial(1));
  for (int letter : b.letters()) {
    const int i = std::abs(letter) - 1;
    // sigma_i = alpha * 1 + beta * e_i; sigma_i^-1 = alpha * e_i + beta * 1.
    const Monomial &keep = letter > 0 ? kAlpha : kBeta;
    const Monomial &cup = letter > 0 ? kBeta : kAlpha;
    TLVector next;
    for (const auto &[m, c] : v) {
      add_into(next, m, keep * c);
      Matching e = m;
      const int loops = stack_cupcap(e, i);
      add_into(next, std::move(e), loops ? (cup * kDelta) * c : cup * c);
    }
    if (opts.reduce_early)
      for (auto &[m, c] : next)
        c = normal_form(c).representative;
    v = std::move(next);
  }
  return v;
}

namespace {

Polynomial close_tl(const TLVector &v) {
  Polynomial sum;
  for (const auto &[m, c] : v) {
    const auto loops = static_cast<std::uint32_t>(tl_closure_loops(m));
    sum += Monomial{0, 0, loops} * c;
  }
  return sum;
}

} // namespace

Polynomial tl_evaluate(const BraidWord &b, int strand_cap) {
  return close_tl(tl_expand(b, {strand_cap, false}));
}

NormalForm tl_normal_form(const BraidWord &b, int strand_cap) {
  return normal_form(close_tl(tl_expand(b, {strand_cap, true})));
}

// ---------------------------------------------------------------------------

Polynomial raw_bracket(const BraidWord &b, Engine engine) {
  return engine == Engine::naive ? bracket3_raw(closure(b)) : tl_evaluate(b);
}

NormalForm bracket3(const Diagram &d) { return normal_form(bracket3_raw(d)); }

NormalForm bracket3(const BraidWord &b, Engine engine) {
  return engine == Engine::tl ? tl_normal_form(b)
                              : normal_form(bracket3_raw(closure(b)));
}

const CurlFactors &curl_factors() {
  static const CurlFactors factors = [] {
    const BraidWord unknot(1, {});
    const Polynomial base = bracket3_raw(closure(unknot));
    auto derive = [&](int sign) {
      const Polynomial kinked = bracket3_raw(closure(add_kink(unknot, sign)));
      if (base != Polynomial(kDelta))
        throw std::logic_error("crossingless unknot must evaluate to delta");
      return kinked.exact_div(kDelta);
    };
    return CurlFactors{derive(+1), derive(-1)};
  }();
  return factors;
}

NormalForm ambient3_from_raw(const Polynomial &raw, int writhe) {
  if (writhe == 0)
    return normal_form(raw);
  const Polynomial &opposite = curl_factors().factor(writhe > 0 ? -1 : +1);
  return normal_form(opposite.pow(static_cast<unsigned>(std::abs(writhe))) *
                     raw);
}

NormalForm ambient3(const Diagram &d) {
  return ambient3_from_raw(bracket3_raw(d), d.writhe());
}

NormalForm ambient3(const BraidWord &b, Engine engine) {
  return ambient3_from_raw(raw_bracket(b, engine), b.exponent_sum());
}

NormalForm ambient3_displayed_from_raw(const Polynomial &raw, int writhe) {
  // a*d^2 + b*d for non-negative writhe, b*d^2 + a*d for negative writhe.
  const Polynomial factor =
      writhe >= 0 ? Polynomial::from_terms({{{1, 0, 2}, 1}, {{0, 1, 1}, 1}})
                  : Polynomial::from_terms({{{0, 1, 2}, 1}, {{1, 0, 1}, 1}});
  return normal_form(factor.pow(static_cast<unsigned>(std::abs(writhe))) * raw);
}

} // namespace qbracket
