#pragma once

#include <map>
#include <string>

#include "qbracket/multipoly.hpp"

namespace qbracket {

// Integer Laurent polynomial in alpha, home of the classical bracket.
class LaurentPolynomial {
public:
  using TermMap = std::map<int, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Integer &c); // NOLINT
  LaurentPolynomial(int c) : LaurentPolynomial(Integer(c)) {} // NOLINT
  static LaurentPolynomial monomial(int exponent, const Integer &c = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap &terms() const { return terms_; }
  Integer coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial pow(unsigned e) const;
  // alpha -> alpha^-1
  LaurentPolynomial mirror() const;

  // Terms by descending exponent, each written "<sign><|c|>*a^<e>" and
  // separated by single spaces, e.g. "-1*a^5 -1*a^-3 +1*a^-7". Zero is "0".
  std::string to_string() const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial &p,
                                     const LaurentPolynomial &q);
  friend LaurentPolynomial operator-(const LaurentPolynomial &p,
                                     const LaurentPolynomial &q);
  friend LaurentPolynomial operator*(const LaurentPolynomial &p,
                                     const LaurentPolynomial &q);
  LaurentPolynomial &operator+=(const LaurentPolynomial &q);

  bool operator==(const LaurentPolynomial &) const = default;

private:
  void add_term(int e, const Integer &c);
  TermMap terms_;
};

// -alpha^-2 - alpha^2, the classical value of an extra circle.
LaurentPolynomial classical_loop();

} // namespace qbracket
