#ifndef EXACTRIG_STURM_HPP
#define EXACTRIG_STURM_HPP

#include <vector>

#include "exactrig/polynomial.hpp"
#include "exactrig/rational.hpp"

namespace exactrig {

struct RationalInterval {
    BigRational lo;
    BigRational hi;
    bool open_lo = false;
    bool open_hi = false;
};

struct RootCount {
    RationalInterval interval;
    long count = 0;  // distinct real roots of the queried polynomial
};

// Sturm chain of a squarefree polynomial: primitive integer members with
// signs intact (each remainder is negated and rescaled by a positive
// rational only).
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& squarefree);

// Exact count of distinct real roots of p in the interval. Endpoint
// membership for open/closed flags is decided by exact evaluation.
// p must be nonzero and lo <= hi.
RootCount sturm_count(const IntPolynomial& p, const BigRational& lo, const BigRational& hi,
                      bool open_lo, bool open_hi);

// Distinct real roots on the whole line.
long count_real_roots(const IntPolynomial& p);

// Strict bound B with every complex root of p inside |z| < B.
BigRational cauchy_root_bound(const IntPolynomial& p);

// Disjoint isolating intervals in ascending root order; each is open,
// has non-root endpoints, and contains exactly one root of p.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p);

// Bisects an isolating interval until its width is at most `width`;
// returns the midpoint (the exact root for degenerate intervals).
BigRational refine_root(const IntPolynomial& p, const RationalInterval& isolating,
                        const BigRational& width);

}  // namespace exactrig

#endif
