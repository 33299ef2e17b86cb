#pragma once

#include "qbracket/diagram.hpp"
#include "qbracket/laurent.hpp"

namespace qbracket {

// Classical bracket: sum over states of alpha^(a-b) (-alpha^-2 - alpha^2)^(loops-1).
// Throws CapacityError above `cap` crossings.
LaurentPolynomial kauffman_bracket(const Diagram &d,
                                   int cap = kDefaultEnumerationCap);

// (-alpha^3)^(-writhe) * <D>, the ambient isotopy normalization.
LaurentPolynomial f_invariant(const Diagram &d,
                              int cap = kDefaultEnumerationCap);

// Same normalization applied to an already computed bracket.
LaurentPolynomial normalize_writhe(const LaurentPolynomial &bracket, int writhe);

} // namespace qbracket
