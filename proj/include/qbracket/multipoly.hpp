#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qbracket {

using Integer = boost::multiprecision::cpp_int;

// Variables of the ambient ring Z[alpha, beta, delta], spelled a, b, d in text.
enum class Var : int { alpha = 0, beta = 1, delta = 2 };

inline constexpr std::size_t kMaxTerms = 1'000'000;

struct Monomial {
  std::array<std::uint32_t, 3> exps{0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(std::uint32_t a, std::uint32_t b, std::uint32_t d)
      : exps{a, b, d} {}

  std::uint32_t operator[](Var v) const { return exps[static_cast<int>(v)]; }
  std::uint32_t degree() const { return exps[0] + exps[1] + exps[2]; }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial &other) const;
  Monomial operator*(const Monomial &other) const;
  // Caller guarantees other.divides(*this).
  Monomial operator/(const Monomial &other) const;

  // Storage order: plain lexicographic on (alpha, beta, delta).
  auto operator<=>(const Monomial &) const = default;
};

Monomial lcm(const Monomial &x, const Monomial &y);
bool coprime(const Monomial &x, const Monomial &y);

// Lexicographic order given by a variable precedence. The default instance is
// alpha > beta > delta.
class MonomialOrder {
public:
  constexpr MonomialOrder() = default;
  explicit MonomialOrder(std::array<Var, 3> precedence);

  std::strong_ordering compare(const Monomial &x, const Monomial &y) const;
  bool less(const Monomial &x, const Monomial &y) const {
    return compare(x, y) == std::strong_ordering::less;
  }
  const std::array<Var, 3> &precedence() const { return precedence_; }
  bool is_default() const;

private:
  std::array<Var, 3> precedence_{Var::alpha, Var::beta, Var::delta};
};

std::strong_ordering mono_cmp(const Monomial &x, const Monomial &y,
                              const MonomialOrder &ord = {});

struct Term {
  Monomial mono;
  Integer coeff;
};

// Sparse polynomial over Z in alpha, beta, delta. Immutable in practice: every
// operation returns a new value. No stored coefficient is zero.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(const Integer &c); // NOLINT: integers embed as constants
  Polynomial(int c) : Polynomial(Integer(c)) {} // NOLINT
  Polynomial(const Monomial &m, const Integer &c = 1);

  static Polynomial variable(Var v, std::uint32_t power = 1);
  static Polynomial from_terms(const std::vector<Term> &terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap &terms() const { return terms_; }
  Integer coefficient(const Monomial &m) const;

  Term leading_term(const MonomialOrder &ord = {}) const;
  Monomial leading_monomial(const MonomialOrder &ord = {}) const;
  Integer leading_coefficient(const MonomialOrder &ord = {}) const;

  // Non-negative gcd of all coefficients (0 for the zero polynomial).
  Integer content() const;
  // Divides out the content; leading coefficient made positive.
  Polynomial primitive_part(const MonomialOrder &ord = {}) const;
  // Every coefficient must be divisible by c.
  Polynomial exact_div(const Integer &c) const;
  // Every term must be divisible by m.
  Polynomial exact_div(const Monomial &m) const;
  Polynomial pow(unsigned e) const;

  std::complex<double> evaluate(std::complex<double> a, std::complex<double> b,
                                std::complex<double> d) const;

  // Canonical text: lex-descending (alpha > beta > delta), signed coefficients,
  // unit coefficients and exponents elided, e.g. "+a^2*d +2*a*b*d^2 -d^2 +b^2*d".
  std::string to_string() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial &p, const Polynomial &q);
  friend Polynomial operator-(const Polynomial &p, const Polynomial &q);
  friend Polynomial operator*(const Polynomial &p, const Polynomial &q);
  friend Polynomial operator*(const Integer &c, const Polynomial &p);
  friend Polynomial operator*(const Monomial &m, const Polynomial &p);
  Polynomial &operator+=(const Polynomial &q);

  bool operator==(const Polynomial &other) const = default;

private:
  explicit Polynomial(TermMap terms);
  void add_term(const Monomial &m, const Integer &c);
  static void check_size(std::size_t n);

  TermMap terms_;
};

// Parses the canonical grammar. Whitespace is ignored; a leading '+' is
// optional; coefficients may be written before or without '*'.
Polynomial parse_polynomial(std::string_view text);

Polynomial poly_add(const Polynomial &p, const Polynomial &q);
Polynomial poly_mul(const Polynomial &p, const Polynomial &q);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  // scale * p == sum(quotients[i] * basis[i]) + remainder. The scale stays 1
  // whenever every leading coefficient used is a unit.
  Integer scale{1};
};

// Multivariate division. The largest reducible term is reduced first, by the
// earliest basis element whose leading term divides it. Non-unit leading
// coefficients are handled by pseudo-division (see DivisionResult::scale).
DivisionResult divide(const Polynomial &p, const std::vector<Polynomial> &basis,
                      const MonomialOrder &ord = {});

// S-polynomial scaled by the lcm of the leading coefficients so that it stays
// in Z[alpha, beta, delta]. Throws std::invalid_argument on a zero input.
Polynomial s_poly(const Polynomial &p, const Polynomial &q,
                  const MonomialOrder &ord = {});

struct BuchbergerOptions {
  // Abort if the basis grows beyond this many elements.
  std::size_t max_basis = 10'000;
};

// Groebner basis of the ideal generated by gens (over Q, with integer
// primitive representatives). Input generators come first, in input order.
std::vector<Polynomial> buchberger(const std::vector<Polynomial> &gens,
                                   const MonomialOrder &ord = {},
                                   const BuchbergerOptions &opts = {});

// Minimal, inter-reduced basis with positive leading coefficients, sorted by
// ascending leading monomial. Integer content is kept unless `primitive`.
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial> &basis,
                                     const MonomialOrder &ord = {},
                                     bool primitive = false);

// True iff every S-polynomial of the basis reduces to zero against it.
bool is_groebner(const std::vector<Polynomial> &basis,
                 const MonomialOrder &ord = {});

} // namespace qbracket
