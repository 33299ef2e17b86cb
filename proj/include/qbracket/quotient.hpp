#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qbracket/laurent.hpp"
#include "qbracket/multipoly.hpp"

namespace qbracket {

// The ideal I = <p1, p2> of Z[alpha, beta, delta] under which the
// three-variable bracket is blind to the second Reidemeister move, together
// with its lex Groebner basis (q1, q2, q3).
struct FixedIdeal {
  Polynomial p1, p2;
  Polynomial q1, q2, q3;
  MonomialOrder order;

  std::vector<Polynomial> generators() const { return {p1, p2}; }
  std::vector<Polynomial> groebner() const { return {q1, q2, q3}; }
};

const FixedIdeal &fixed_ideal();

// Distinguished coset representative: the remainder modulo (q1, q2, q3).
struct NormalForm {
  Polynomial representative;

  std::string to_string() const { return representative.to_string(); }
  bool operator==(const NormalForm &) const = default;
};

NormalForm normal_form(const Polynomial &p);

// beta -> alpha^-1, delta -> -alpha^-2 - alpha^2.
LaurentPolynomial specialize_classical(const Polynomial &p);

// ---------------------------------------------------------------------------
// Groebner verification

struct CheckResult {
  std::string check;
  bool pass = true;
  std::string detail;
  // Canonical text of polynomials that failed the check.
  std::vector<std::string> witnesses;
};

struct GroebnerReport {
  std::vector<CheckResult> checks;
  // reduce_basis(buchberger(p1, p2)) with content removed, for inspection.
  std::vector<Polynomial> computed_basis;
  bool pass() const;
};

// (1) S-polynomials of the stored basis reduce to zero against it;
// (2) p1, p2 reduce to zero against it; (3) q1, q2, q3 reduce to zero against
// buchberger(p1, p2). The detail of (3) states how the recomputed reduced
// basis relates to the stored one.
GroebnerReport verify_groebner();

// ---------------------------------------------------------------------------
// Variety branches

// (-1)^(num/den), i.e. exp(i*pi*num/den).
struct RootOfUnity {
  int num = 0;
  int den = 1;
};

// coeff * root * alpha^e0 * beta^e1 * delta^e2; only free variables carry
// exponents.
struct BranchTerm {
  int coeff = 1;
  RootOfUnity root;
  std::array<int, 3> exps{0, 0, 0};
};

struct BranchExpr {
  std::vector<BranchTerm> terms;

  // Empty when some variable with a negative exponent is zero.
  std::optional<std::complex<double>>
  evaluate(const std::array<std::complex<double>, 3> &values) const;
  std::string to_string() const;
};

struct BranchSubstitution {
  std::string label; // as printed in the source list, e.g. "sol_12"
  int index = 0;     // 1-based position in the source list
  std::array<std::optional<BranchExpr>, 3> assignments;
  std::vector<Var> free;

  std::string to_string() const;
};

// Every branch as listed, duplicates included (34 entries, one label repeated).
const std::vector<BranchSubstitution> &raw_branches();

// Branches deduplicated by value; the first occurrence is kept.
std::vector<BranchSubstitution> branches();

// Fixed sample points for free variables.
const std::array<std::complex<double>, 4> &branch_samples();

// Two branches are equal when they assign the same variables and agree
// numerically at every sample point.
bool same_branch(const BranchSubstitution &x, const BranchSubstitution &y);

struct BranchReport {
  std::string label;
  int index = 0;
  bool pass = false;
  double max_residual_p1 = 0.0;
  double max_residual_p2 = 0.0;
  int evaluated = 0;
  std::vector<int> skipped; // sample indices hit by a division by zero
};

BranchReport verify_branch(const BranchSubstitution &b, int samples = 4,
                           double tol = 1e-9);

} // namespace qbracket
