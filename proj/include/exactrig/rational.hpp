#ifndef EXACTRIG_RATIONAL_HPP
#define EXACTRIG_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exactrig {

// Arbitrary-precision integers and rationals, GMP-backed. Rationals are
// kept in lowest terms with positive denominator by the backend.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    BigRational q(std::move(num));
    q /= BigRational(std::move(den));
    return q;
}

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRational& x) { return x.sign(); }

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// Parses "p/q", plain integers, and decimal literals ("22.5" -> 45/2).
BigRational parse_rational(const std::string& text);

// Lowest-terms "p/q" (plain "p" when the denominator is 1).
std::string rational_to_string(const BigRational& q);

// Decimal rendering with `significant` significant digits, truncated.
// Display helper only; never feeds back into exact computations.
std::string decimal_string(const BigRational& q, int significant);

}  // namespace exactrig

#endif
