#include "qbracket/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qbracket {

namespace {

Polynomial poly(std::initializer_list<Term> terms) {
  return Polynomial::from_terms(std::vector<Term>(terms));
}

FixedIdeal make_fixed_ideal() {
  FixedIdeal ideal;
  // p1 = a^2 d + 2 a b d^2 - d^2 + b^2 d
  ideal.p1 = poly({{{2, 0, 1}, 1}, {{1, 1, 2}, 2}, {{0, 0, 2}, -1},
                   {{0, 2, 1}, 1}});
  // p2 = a b d^3 + a^2 d^2 + b^2 d^2 + a b d - d
  ideal.p2 = poly({{{1, 1, 3}, 1}, {{2, 0, 2}, 1}, {{0, 2, 2}, 1},
                   {{1, 1, 1}, 1}, {{0, 0, 1}, -1}});
  // q1 = d^3 b^4 - d b^4 + d^4 b^2 - d^2 b^2 + d^3 - d
  ideal.q1 = poly({{{0, 4, 3}, 1}, {{0, 4, 1}, -1}, {{0, 2, 4}, 1},
                   {{0, 2, 2}, -1}, {{0, 0, 3}, 1}, {{0, 0, 1}, -1}});
  // q2 = b d^4 + b^3 d^3 + a d^3 - b d^2 - b^3 d - a d
  ideal.q2 = poly({{{0, 1, 4}, 1}, {{0, 3, 3}, 1}, {{1, 0, 3}, 1},
                   {{0, 1, 2}, -1}, {{0, 3, 1}, -1}, {{1, 0, 1}, -1}});
  // q3 = d a^2 + 2 b d^2 a - d^2 + b^2 d
  ideal.q3 = poly({{{2, 0, 1}, 1}, {{1, 1, 2}, 2}, {{0, 0, 2}, -1},
                   {{0, 2, 1}, 1}});
  return ideal;
}

std::string join(const std::vector<Polynomial> &ps) {
  std::string out;
  for (const auto &p : ps) {
    if (!out.empty())
      out += "; ";
    out += p.to_string();
  }
  return out;
}

} // namespace

const FixedIdeal &fixed_ideal() {
  static const FixedIdeal ideal = make_fixed_ideal();
  return ideal;
}

NormalForm normal_form(const Polynomial &p) {
  const auto &ideal = fixed_ideal();
  return {divide(p, ideal.groebner(), ideal.order).remainder};
}

LaurentPolynomial specialize_classical(const Polynomial &p) {
  const LaurentPolynomial loop = classical_loop();
  std::vector<LaurentPolynomial> loop_powers{LaurentPolynomial(1)};
  LaurentPolynomial out;
  for (const auto &[m, c] : p.terms()) {
    const auto d = m[Var::delta];
    while (loop_powers.size() <= d)
      loop_powers.push_back(loop_powers.back() * loop);
    const int shift =
        static_cast<int>(m[Var::alpha]) - static_cast<int>(m[Var::beta]);
    out += LaurentPolynomial::monomial(shift, c) * loop_powers[d];
  }
  return out;
}

// ---------------------------------------------------------------------------

bool GroebnerReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.pass; });
}

GroebnerReport verify_groebner() {
  const auto &ideal = fixed_ideal();
  const auto basis = ideal.groebner();
  const auto &ord = ideal.order;
  GroebnerReport report;

  CheckResult spolys{"s_polynomials_reduce", true, "", {}};
  int pairs = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      ++pairs;
      Polynomial r = divide(s_poly(basis[i], basis[j], ord), basis, ord).remainder;
      if (!r.is_zero()) {
        spolys.pass = false;
        spolys.witnesses.push_back(r.to_string());
      }
    }
  }
  spolys.detail = std::to_string(pairs) + " pairs (q_i, q_j), i <= j";
  report.checks.push_back(spolys);

  CheckResult gens{"generators_reduce", true, "p1, p2 modulo (q1, q2, q3)", {}};
  for (const auto &p : ideal.generators()) {
    Polynomial r = divide(p, basis, ord).remainder;
    if (!r.is_zero()) {
      gens.pass = false;
      gens.witnesses.push_back(r.to_string());
    }
  }
  report.checks.push_back(gens);

  const auto computed = buchberger(ideal.generators(), ord);
  CheckResult back{"basis_in_ideal", true, "", {}};
  for (const auto &q : basis) {
    Polynomial r = divide(q, computed, ord).remainder;
    if (!r.is_zero()) {
      back.pass = false;
      back.witnesses.push_back(r.to_string());
    }
  }
  report.computed_basis = reduce_basis(computed, ord, /*primitive=*/true);
  std::ostringstream detail;
  detail << "q1, q2, q3 modulo buchberger(p1, p2) (" << computed.size()
         << " elements); reduced primitive basis ";
  if (report.computed_basis == basis)
    detail << "equals (q1, q2, q3) exactly";
  else
    detail << "is [" << join(report.computed_basis) << "]";
  back.detail = detail.str();
  report.checks.push_back(back);
  return report;
}

// ---------------------------------------------------------------------------
// Branches

namespace {

using cplx = std::complex<double>;

cplx root_value(const RootOfUnity &r) {
  return std::polar(1.0, std::numbers::pi * r.num / r.den);
}

BranchExpr operator+(BranchExpr x, const BranchExpr &y) {
  x.terms.insert(x.terms.end(), y.terms.begin(), y.terms.end());
  return x;
}

BranchExpr operator*(int k, BranchExpr x) {
  for (auto &t : x.terms)
    t.coeff *= k;
  return x;
}

BranchExpr operator-(const BranchExpr &x) { return -1 * x; }
BranchExpr operator-(const BranchExpr &x, const BranchExpr &y) {
  return x + (-y);
}

BranchExpr num(int k) { return {{BranchTerm{k, {0, 1}, {0, 0, 0}}}}; }
// (-1)^(n/d)
BranchExpr zeta(int n, int d) { return {{BranchTerm{1, {n, d}, {0, 0, 0}}}}; }
BranchExpr imag_unit() { return zeta(1, 2); }
BranchExpr alpha_pow(int e) { return {{BranchTerm{1, {0, 1}, {e, 0, 0}}}}; }

struct Assign {
  Var var;
  BranchExpr expr;
};

BranchSubstitution make_branch(int index, const std::string &label,
                               std::initializer_list<Assign> assigns) {
  BranchSubstitution b;
  b.index = index;
  b.label = label;
  for (const auto &a : assigns)
    b.assignments[static_cast<int>(a.var)] = a.expr;
  for (Var v : {Var::alpha, Var::beta, Var::delta})
    if (!b.assignments[static_cast<int>(v)])
      b.free.push_back(v);
  return b;
}

std::vector<BranchSubstitution> make_raw_branches() {
  const Var A = Var::alpha, B = Var::beta, D = Var::delta;
  const BranchExpr i = imag_unit();
  const BranchExpr a = alpha_pow(1);
  std::vector<BranchSubstitution> out;
  int index = 0;
  auto add = [&](int label, std::initializer_list<Assign> assigns) {
    out.push_back(make_branch(++index, "sol_" + std::to_string(label), assigns));
  };
  add(1, {{B, alpha_pow(-1)}, {D, -alpha_pow(2) - alpha_pow(-2)}});
  add(2, {{D, num(-1)}, {B, a - i}});
  add(3, {{D, num(-1)}, {B, a + i}});
  add(4, {{D, num(1)}, {B, -a - num(1)}});
  add(5, {{D, num(1)}, {B, num(1) - a}});
  add(6, {{B, -zeta(1, 6)}, {D, num(-1)}, {A, zeta(5, 6)}});
  add(7, {{B, zeta(1, 6)}, {D, num(-1)}, {A, -zeta(5, 6)}});
  add(8, {{B, -zeta(1, 3)}, {D, num(1)}, {A, zeta(2, 3)}});
  add(9, {{B, zeta(1, 3)}, {D, num(1)}, {A, -zeta(2, 3)}});
  add(10, {{B, -i - zeta(1, 6)}, {D, num(-1)}, {A, -zeta(1, 6)}});
  add(11, {{B, i - zeta(1, 6)}, {D, num(-1)}, {A, -zeta(1, 6)}});
  add(12, {{B, 2 * i - zeta(1, 6)}, {D, num(-1)}, {A, zeta(5, 6)}});
  add(12, {{B, -i + zeta(1, 6)}, {D, num(-1)}, {A, zeta(1, 6)}});
  add(13, {{B, i + zeta(1, 6)}, {D, num(-1)}, {A, zeta(1, 6)}});
  add(14, {{B, -2 * i + zeta(1, 6)}, {D, num(-1)}, {A, -zeta(5, 6)}});
  add(15, {{B, num(-1) - zeta(1, 3)}, {D, num(1)}, {A, zeta(1, 3)}});
  add(16, {{B, num(1) - zeta(1, 3)}, {D, num(1)}, {A, zeta(1, 3)}});
  add(17, {{B, num(2) - zeta(1, 3)}, {D, num(1)}, {A, zeta(2, 3)}});
  add(18, {{B, num(-2) + zeta(1, 3)}, {D, num(1)}, {A, -zeta(2, 3)}});
  add(19, {{B, num(-1) + zeta(1, 3)}, {D, num(1)}, {A, -zeta(1, 3)}});
  add(20, {{B, num(1) + zeta(1, 3)}, {D, num(1)}, {A, -zeta(1, 3)}});
  add(21, {{D, num(-1)}, {B, -2 * i}, {A, -i}});
  add(22, {{D, num(-1)}, {B, 2 * i}, {A, i}});
  add(23, {{D, num(-1)}, {B, i - zeta(1, 6)}, {A, -zeta(1, 6)}});
  add(24, {{D, num(-1)}, {B, -i + zeta(1, 6)}, {A, zeta(1, 6)}});
  add(25, {{D, num(-1)}, {B, i - zeta(5, 6)}, {A, -zeta(5, 6)}});
  add(26, {{D, num(-1)}, {B, -i + zeta(5, 6)}, {A, zeta(5, 6)}});
  add(27, {{D, num(1)}, {B, num(-2)}, {A, num(1)}});
  add(28, {{D, num(1)}, {B, num(2)}, {A, num(-1)}});
  add(29, {{D, num(1)}, {B, num(1) - zeta(1, 3)}, {A, zeta(1, 3)}});
  add(30, {{D, num(1)}, {B, num(-1) + zeta(1, 3)}, {A, -zeta(1, 3)}});
  add(31, {{D, num(1)}, {B, num(-1) - zeta(2, 3)}, {A, zeta(2, 3)}});
  add(32, {{D, num(1)}, {B, num(1) + zeta(2, 3)}, {A, -zeta(2, 3)}});
  add(33, {{D, num(0)}});
  return out;
}

// Free-variable values for sample k: the i-th free variable takes
// samples[(k + i) % 4].
std::array<cplx, 3> sample_values(const BranchSubstitution &b, int k) {
  const auto &samples = branch_samples();
  std::array<cplx, 3> values{0.0, 0.0, 0.0};
  for (std::size_t f = 0; f < b.free.size(); ++f)
    values[static_cast<int>(b.free[f])] = samples[(k + f) % samples.size()];
  return values;
}

// Full point (alpha, beta, delta) for sample k, or empty on a pole.
std::optional<std::array<cplx, 3>> branch_point(const BranchSubstitution &b,
                                                int k) {
  const auto free_values = sample_values(b, k);
  std::array<cplx, 3> point = free_values;
  for (int v = 0; v < 3; ++v) {
    if (!b.assignments[v])
      continue;
    auto value = b.assignments[v]->evaluate(free_values);
    if (!value)
      return std::nullopt;
    point[v] = *value;
  }
  return point;
}

} // namespace

std::optional<cplx>
BranchExpr::evaluate(const std::array<cplx, 3> &values) const {
  cplx sum = 0.0;
  for (const auto &t : terms) {
    cplx term = static_cast<double>(t.coeff) * root_value(t.root);
    for (int v = 0; v < 3; ++v) {
      if (t.exps[v] == 0)
        continue;
      if (t.exps[v] < 0 && values[v] == cplx(0.0))
        return std::nullopt;
      term *= std::pow(values[v], t.exps[v]);
    }
    sum += term;
  }
  return sum;
}

std::string BranchExpr::to_string() const {
  static constexpr char names[3] = {'a', 'b', 'd'};
  if (terms.empty())
    return "0";
  std::string out;
  for (const auto &t : terms) {
    if (!out.empty())
      out += ' ';
    out += t.coeff < 0 ? '-' : '+';
    std::string body;
    bool need_star = false;
    auto append = [&](const std::string &s) {
      if (need_star)
        body += '*';
      body += s;
      need_star = true;
    };
    const bool unit_coeff = std::abs(t.coeff) == 1;
    const bool has_factor = t.root.num != 0 || t.exps != std::array<int, 3>{};
    if (!unit_coeff || !has_factor)
      append(std::to_string(std::abs(t.coeff)));
    if (t.root.num != 0)
      append("(-1)^(" + std::to_string(t.root.num) + "/" +
             std::to_string(t.root.den) + ")");
    for (int v = 0; v < 3; ++v)
      if (t.exps[v] != 0)
        append(std::string(1, names[v]) +
               (t.exps[v] == 1 ? "" : "^" + std::to_string(t.exps[v])));
    out += body;
  }
  return out;
}

std::string BranchSubstitution::to_string() const {
  static constexpr char names[3] = {'a', 'b', 'd'};
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < 3; ++v) {
    if (!assignments[v])
      continue;
    if (!first)
      out += ", ";
    out += std::string(1, names[v]) + " -> " + assignments[v]->to_string();
    first = false;
  }
  return out + "}";
}

const std::vector<BranchSubstitution> &raw_branches() {
  static const std::vector<BranchSubstitution> list = make_raw_branches();
  return list;
}

const std::array<cplx, 4> &branch_samples() {
  static const std::array<cplx, 4> samples{cplx(2.0, 0.0), cplx(3.0, 1.0),
                                           cplx(-0.5, 0.0), cplx(0.0, 5.0)};
  return samples;
}

bool same_branch(const BranchSubstitution &x, const BranchSubstitution &y) {
  for (int v = 0; v < 3; ++v)
    if (x.assignments[v].has_value() != y.assignments[v].has_value())
      return false;
  for (int k = 0; k < static_cast<int>(branch_samples().size()); ++k) {
    auto px = branch_point(x, k);
    auto py = branch_point(y, k);
    if (px.has_value() != py.has_value())
      return false;
    if (!px)
      continue;
    for (int v = 0; v < 3; ++v)
      if (std::abs((*px)[v] - (*py)[v]) > 1e-12)
        return false;
  }
  return true;
}

std::vector<BranchSubstitution> branches() {
  std::vector<BranchSubstitution> out;
  for (const auto &b : raw_branches()) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const auto &kept) {
      return same_branch(kept, b);
    });
    if (!dup)
      out.push_back(b);
  }
  return out;
}

BranchReport verify_branch(const BranchSubstitution &b, int samples,
                           double tol) {
  if (samples < 1)
    throw std::invalid_argument("verify_branch needs at least one sample");
  if (!(tol > 0.0))
    throw std::invalid_argument("verify_branch tolerance must be positive");
  const auto &ideal = fixed_ideal();
  BranchReport report;
  report.label = b.label;
  report.index = b.index;
  bool within = true;
  for (int k = 0; k < samples; ++k) {
    auto point = branch_point(b, k);
    if (!point) {
      report.skipped.push_back(k);
      continue;
    }
    const auto [a, be, d] = *point;
    const double r1 = std::abs(ideal.p1.evaluate(a, be, d));
    const double r2 = std::abs(ideal.p2.evaluate(a, be, d));
    report.max_residual_p1 = std::max(report.max_residual_p1, r1);
    report.max_residual_p2 = std::max(report.max_residual_p2, r2);
    within = within && r1 < tol && r2 < tol;
    ++report.evaluated;
  }
  report.pass = within && report.evaluated > 0;
  return report;
}

} // namespace qbracket
