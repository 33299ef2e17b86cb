#include "qbracket/laurent.hpp"

#include <stdexcept>

namespace qbracket {

LaurentPolynomial::LaurentPolynomial(const Integer &c) {
  if (c != 0)
    terms_.emplace(0, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Integer &c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPolynomial::add_term(int e, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty())
    throw std::invalid_argument("zero Laurent polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty())
    throw std::invalid_argument("zero Laurent polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result(1);
  for (unsigned i = 0; i < e; ++i)
    result = result * *this;
  return result;
}

LaurentPolynomial LaurentPolynomial::mirror() const {
  LaurentPolynomial out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(-e, c);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty())
      out += ' ';
    out += it->second < 0 ? '-' : '+';
    out += Integer(abs(it->second)).str();
    out += "*a^" + std::to_string(it->first);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto &[e, c] : out.terms_)
    c = -c;
  return out;
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &q) {
  for (const auto &[e, c] : q.terms_)
    add_term(e, c);
  return *this;
}

LaurentPolynomial operator+(const LaurentPolynomial &p,
                            const LaurentPolynomial &q) {
  LaurentPolynomial r = p;
  r += q;
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial &p,
                            const LaurentPolynomial &q) {
  return p + (-q);
}

LaurentPolynomial operator*(const LaurentPolynomial &p,
                            const LaurentPolynomial &q) {
  LaurentPolynomial r;
  for (const auto &[ep, cp] : p.terms_)
    for (const auto &[eq, cq] : q.terms_)
      r.add_term(ep + eq, cp * cq);
  return r;
}

LaurentPolynomial classical_loop() {
  return LaurentPolynomial::monomial(-2, -1) + LaurentPolynomial::monomial(2, -1);
}

} // namespace qbracket
