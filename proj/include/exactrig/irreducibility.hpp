#ifndef EXACTRIG_IRREDUCIBILITY_HPP
#define EXACTRIG_IRREDUCIBILITY_HPP

#include "exactrig/polynomial.hpp"

namespace exactrig {

// True iff p has no nonconstant integer-polynomial factor of smaller
// degree. p must be nonzero, of degree >= 1, and primitive.
//
// Bounded factor search: a rational-root test handles degree-1 factors,
// then candidate factors of degree k <= deg(p)/2 are scanned inside the
// coefficient box |c_j| <= |lead| * binomial(k, k-j) * B^(k-j), where B is
// the smallest verified root bound (the minimal integer interval when all
// roots are real, the Cauchy bound otherwise). Value filters at 0 and +-1
// prune the box before trial division. The search is exhaustive, so cost
// grows steeply with the factor degree; intended for desk-scale inputs
// (factor degree <= 5 or so).
bool is_irreducible(const IntPolynomial& p);

}  // namespace exactrig

#endif
