#include "qbracket/classical.hpp"

namespace qbracket {

LaurentPolynomial kauffman_bracket(const Diagram &d, int cap) {
  const StateCensus census = state_census(d, cap);
  const int n = census.crossings;
  const LaurentPolynomial loop = classical_loop();
  std::vector<LaurentPolynomial> loop_powers{LaurentPolynomial(1)};
  LaurentPolynomial sum;
  for (int a = 0; a <= n; ++a) {
    for (std::size_t l = 1; l < census.count[a].size(); ++l) {
      const auto c = census.count[a][l];
      if (c == 0)
        continue;
      while (loop_powers.size() < l)
        loop_powers.push_back(loop_powers.back() * loop);
      sum += LaurentPolynomial::monomial(a - (n - a), Integer(c)) *
             loop_powers[l - 1];
    }
  }
  return sum;
}

LaurentPolynomial normalize_writhe(const LaurentPolynomial &bracket,
                                   int writhe) {
  const Integer sign = writhe % 2 == 0 ? 1 : -1;
  return LaurentPolynomial::monomial(-3 * writhe, sign) * bracket;
}

LaurentPolynomial f_invariant(const Diagram &d, int cap) {
  return normalize_writhe(kauffman_bracket(d, cap), d.writhe());
}

} // namespace qbracket
