#include "qbracket/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "qbracket/errors.hpp"

namespace qbracket {

namespace {

constexpr char kVarNames[3] = {'a', 'b', 'd'};

Integer gcd(const Integer &x, const Integer &y) {
  return boost::multiprecision::gcd(x, y);
}

Integer lcm_int(const Integer &x, const Integer &y) {
  if (x == 0 || y == 0)
    return 0;
  return abs(x / gcd(x, y) * y);
}

// Working storage for division, ordered by the requested monomial order so
// that the largest remaining term is always at rbegin().
struct OrderLess {
  const MonomialOrder *ord;
  bool operator()(const Monomial &x, const Monomial &y) const {
    return ord->less(x, y);
  }
};
using OrderedTerms = std::map<Monomial, Integer, OrderLess>;

void accumulate(OrderedTerms &dst, const Monomial &m, const Integer &c) {
  auto [it, inserted] = dst.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      dst.erase(it);
  }
}

} // namespace

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::divides(const Monomial &other) const {
  return exps[0] <= other.exps[0] && exps[1] <= other.exps[1] &&
         exps[2] <= other.exps[2];
}

Monomial Monomial::operator*(const Monomial &other) const {
  return {exps[0] + other.exps[0], exps[1] + other.exps[1],
          exps[2] + other.exps[2]};
}

Monomial Monomial::operator/(const Monomial &other) const {
  return {exps[0] - other.exps[0], exps[1] - other.exps[1],
          exps[2] - other.exps[2]};
}

Monomial lcm(const Monomial &x, const Monomial &y) {
  return {std::max(x.exps[0], y.exps[0]), std::max(x.exps[1], y.exps[1]),
          std::max(x.exps[2], y.exps[2])};
}

bool coprime(const Monomial &x, const Monomial &y) {
  for (int i = 0; i < 3; ++i)
    if (x.exps[i] != 0 && y.exps[i] != 0)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(std::array<Var, 3> precedence)
    : precedence_(precedence) {
  std::array<bool, 3> seen{};
  for (Var v : precedence)
    seen[static_cast<int>(v)] = true;
  if (!(seen[0] && seen[1] && seen[2]))
    throw std::invalid_argument("monomial order must rank every variable once");
}

std::strong_ordering MonomialOrder::compare(const Monomial &x,
                                            const Monomial &y) const {
  for (Var v : precedence_) {
    if (auto c = x[v] <=> y[v]; c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

bool MonomialOrder::is_default() const {
  return precedence_ == std::array<Var, 3>{Var::alpha, Var::beta, Var::delta};
}

std::strong_ordering mono_cmp(const Monomial &x, const Monomial &y,
                              const MonomialOrder &ord) {
  return ord.compare(x, y);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Integer &c) {
  if (c != 0)
    terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Monomial &m, const Integer &c) {
  if (c != 0)
    terms_.emplace(m, c);
}

Polynomial::Polynomial(TermMap terms) : terms_(std::move(terms)) {
  check_size(terms_.size());
}

Polynomial Polynomial::variable(Var v, std::uint32_t power) {
  Monomial m;
  m.exps[static_cast<int>(v)] = power;
  return Polynomial(m);
}

Polynomial Polynomial::from_terms(const std::vector<Term> &terms) {
  Polynomial p;
  for (const auto &t : terms)
    p.add_term(t.mono, t.coeff);
  check_size(p.terms_.size());
  return p;
}

void Polynomial::check_size(std::size_t n) {
  if (n > kMaxTerms)
    throw CapacityError("polynomial exceeds " + std::to_string(kMaxTerms) +
                        " terms");
}

void Polynomial::add_term(const Monomial &m, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Integer Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Term Polynomial::leading_term(const MonomialOrder &ord) const {
  if (terms_.empty())
    throw std::invalid_argument("zero polynomial has no leading term");
  if (ord.is_default()) {
    const auto &[m, c] = *terms_.rbegin();
    return {m, c};
  }
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (ord.less(best->first, it->first))
      best = it;
  return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder &ord) const {
  return leading_term(ord).mono;
}

Integer Polynomial::leading_coefficient(const MonomialOrder &ord) const {
  return leading_term(ord).coeff;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto &[m, c] : terms_) {
    g = gcd(g, c);
    if (g == 1)
      break;
  }
  return abs(g);
}

Polynomial Polynomial::primitive_part(const MonomialOrder &ord) const {
  if (is_zero())
    return {};
  Integer g = content();
  if (leading_coefficient(ord) < 0)
    g = -g;
  return g == 1 ? *this : exact_div(g);
}

Polynomial Polynomial::exact_div(const Integer &c) const {
  if (c == 0)
    throw std::domain_error("division of polynomial by zero");
  TermMap out;
  for (const auto &[m, coeff] : terms_) {
    if (coeff % c != 0)
      throw std::domain_error("coefficient not divisible in exact_div");
    out.emplace_hint(out.end(), m, coeff / c);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::exact_div(const Monomial &mono) const {
  TermMap out;
  for (const auto &[m, coeff] : terms_) {
    if (!mono.divides(m))
      throw std::domain_error("term not divisible in exact_div");
    out.emplace_hint(out.end(), m / mono, coeff);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

std::complex<double> Polynomial::evaluate(std::complex<double> a,
                                          std::complex<double> b,
                                          std::complex<double> d) const {
  std::complex<double> sum = 0.0;
  for (const auto &[m, c] : terms_) {
    sum += c.convert_to<double>() * std::pow(a, static_cast<int>(m.exps[0])) *
           std::pow(b, static_cast<int>(m.exps[1])) *
           std::pow(d, static_cast<int>(m.exps[2]));
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[m, c] = *it;
    if (!out.empty())
      out += ' ';
    out += c < 0 ? '-' : '+';
    Integer mag = abs(c);
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      out += mag.str();
      need_star = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (m.exps[v] == 0)
        continue;
      if (need_star)
        out += '*';
      out += kVarNames[v];
      if (m.exps[v] != 1)
        out += '^' + std::to_string(m.exps[v]);
      need_star = true;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  TermMap out = terms_;
  for (auto &[m, c] : out)
    c = -c;
  return Polynomial(std::move(out));
}

Polynomial &Polynomial::operator+=(const Polynomial &q) {
  for (const auto &[m, c] : q.terms_)
    add_term(m, c);
  check_size(terms_.size());
  return *this;
}

Polynomial operator+(const Polynomial &p, const Polynomial &q) {
  Polynomial r = p;
  r += q;
  return r;
}

Polynomial operator-(const Polynomial &p, const Polynomial &q) {
  Polynomial r = p;
  for (const auto &[m, c] : q.terms_)
    r.add_term(m, -c);
  Polynomial::check_size(r.terms_.size());
  return r;
}

Polynomial operator*(const Polynomial &p, const Polynomial &q) {
  Polynomial r;
  for (const auto &[mp, cp] : p.terms_)
    for (const auto &[mq, cq] : q.terms_)
      r.add_term(mp * mq, cp * cq);
  Polynomial::check_size(r.terms_.size());
  return r;
}

Polynomial operator*(const Integer &c, const Polynomial &p) {
  if (c == 0)
    return {};
  Polynomial::TermMap out = p.terms_;
  for (auto &[m, coeff] : out)
    coeff *= c;
  return Polynomial(std::move(out));
}

Polynomial operator*(const Monomial &mono, const Polynomial &p) {
  Polynomial::TermMap out;
  for (const auto &[m, c] : p.terms_)
    out.emplace(mono * m, c);
  return Polynomial(std::move(out));
}

Polynomial poly_add(const Polynomial &p, const Polynomial &q) { return p + q; }
Polynomial poly_mul(const Polynomial &p, const Polynomial &q) { return p * q; }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end())
      throw ParseError("empty polynomial text", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      terms.push_back(parse_term(sign));
      first = false;
      skip_ws();
    }
    return Polynomial::from_terms(terms);
  }

private:
  Term parse_term(int sign) {
    Term t{Monomial{}, Integer(sign)};
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end())
        throw ParseError("expected factor", pos_);
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.coeff *= parse_uint();
      } else if (ch == 'a' || ch == 'b' || ch == 'd') {
        ++pos_;
        int v = ch == 'a' ? 0 : ch == 'b' ? 1 : 2;
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<std::uint32_t>(parse_uint());
        }
        t.mono.exps[v] += e;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         pos_);
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any)
      throw ParseError("empty term", pos_);
    return t;
  }

  Integer parse_uint() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected digits", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text) {
  return PolyParser(text).parse();
}

// ---------------------------------------------------------------------------
// Division and Groebner bases

DivisionResult divide(const Polynomial &p, const std::vector<Polynomial> &basis,
                      const MonomialOrder &ord) {
  DivisionResult result;
  if (basis.empty()) {
    result.remainder = p;
    return result;
  }
  std::vector<Term> leads;
  leads.reserve(basis.size());
  for (const auto &b : basis) {
    if (b.is_zero())
      throw std::invalid_argument("division by a zero basis element");
    leads.push_back(b.leading_term(ord));
  }

  OrderedTerms work{OrderLess{&ord}};
  for (const auto &[m, c] : p.terms())
    work.emplace(m, c);
  std::vector<OrderedTerms> quot(basis.size(), OrderedTerms{OrderLess{&ord}});
  OrderedTerms rem{OrderLess{&ord}};

  auto scale_all = [&](const Integer &f) {
    for (auto &[m, c] : work)
      c *= f;
    for (auto &[m, c] : rem)
      c *= f;
    for (auto &q : quot)
      for (auto &[m, c] : q)
        c *= f;
    result.scale *= f;
  };

  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial m = top->first;
    std::size_t k = 0;
    while (k < leads.size() && !leads[k].mono.divides(m))
      ++k;
    if (k == leads.size()) {
      rem.emplace(m, std::move(top->second));
      work.erase(top);
      continue;
    }
    const Integer &lc = leads[k].coeff;
    if (top->second % lc != 0) {
      Integer f = abs(lc / gcd(top->second, lc));
      scale_all(f);
      top = std::prev(work.end());
    }
    const Integer factor = top->second / lc;
    const Monomial shift = m / leads[k].mono;
    accumulate(quot[k], shift, factor);
    for (const auto &[bm, bc] : basis[k].terms())
      accumulate(work, shift * bm, -factor * bc);
    if (work.size() > kMaxTerms)
      throw CapacityError("division exceeded the polynomial term limit");
  }

  auto to_poly = [](const OrderedTerms &t) {
    std::vector<Term> terms;
    terms.reserve(t.size());
    for (const auto &[m, c] : t)
      terms.push_back({m, c});
    return Polynomial::from_terms(terms);
  };
  result.remainder = to_poly(rem);
  result.quotients.reserve(quot.size());
  for (const auto &q : quot)
    result.quotients.push_back(to_poly(q));
  return result;
}

Polynomial s_poly(const Polynomial &p, const Polynomial &q,
                  const MonomialOrder &ord) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("S-polynomial undefined for a zero input");
  const Term tp = p.leading_term(ord);
  const Term tq = q.leading_term(ord);
  const Monomial l = lcm(tp.mono, tq.mono);
  const Integer c = lcm_int(tp.coeff, tq.coeff);
  return (c / tp.coeff) * ((l / tp.mono) * p) -
         (c / tq.coeff) * ((l / tq.mono) * q);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial> &gens,
                                   const MonomialOrder &ord,
                                   const BuchbergerOptions &opts) {
  std::vector<Polynomial> basis;
  for (const auto &g : gens)
    if (!g.is_zero())
      basis.push_back(g);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j,
                       lcm(basis[i].leading_monomial(ord),
                           basis[j].leading_monomial(ord))});
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    add_pairs_with(j);

  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first, ties by pair index.
    auto best = std::min_element(
        pairs.begin(), pairs.end(), [&](const Pair &x, const Pair &y) {
          if (auto c = ord.compare(x.lcm, y.lcm); c != 0)
            return c < 0;
          return std::tie(x.j, x.i) < std::tie(y.j, y.i);
        });
    const Pair pr = *best;
    pairs.erase(best);
    if (coprime(basis[pr.i].leading_monomial(ord),
                basis[pr.j].leading_monomial(ord)))
      continue;
    Polynomial r = divide(s_poly(basis[pr.i], basis[pr.j], ord), basis, ord)
                       .remainder;
    if (r.is_zero())
      continue;
    basis.push_back(r.primitive_part(ord));
    if (basis.size() > opts.max_basis)
      throw CapacityError("Buchberger basis exceeded " +
                          std::to_string(opts.max_basis) + " elements");
    add_pairs_with(basis.size() - 1);
  }
  return basis;
}

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial> &basis,
                                     const MonomialOrder &ord, bool primitive) {
  std::vector<Polynomial> sorted;
  for (const auto &b : basis)
    if (!b.is_zero())
      sorted.push_back(b);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Polynomial &x, const Polynomial &y) {
                     return ord.less(x.leading_monomial(ord),
                                     y.leading_monomial(ord));
                   });

  std::vector<Polynomial> minimal;
  for (const auto &g : sorted) {
    const Monomial lm = g.leading_monomial(ord);
    bool redundant = std::any_of(
        minimal.begin(), minimal.end(), [&](const Polynomial &h) {
          return h.leading_monomial(ord).divides(lm);
        });
    if (!redundant)
      minimal.push_back(g);
  }

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back(minimal[j]);
    Polynomial r = divide(minimal[i], others, ord).remainder;
    if (r.leading_coefficient(ord) < 0)
      r = -r;
    minimal[i] = primitive ? r.primitive_part(ord) : r;
  }
  return minimal;
}

bool is_groebner(const std::vector<Polynomial> &basis,
                 const MonomialOrder &ord) {
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!divide(s_poly(basis[i], basis[j], ord), basis, ord)
               .remainder.is_zero())
        return false;
  return true;
}

} // namespace qbracket
