#ifndef EXACTRIG_POLYNOMIAL_HPP
#define EXACTRIG_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "exactrig/rational.hpp"

namespace exactrig {

// Dense univariate polynomial over the integers. Coefficients are stored
// ascending by power with no trailing zeros; an empty vector is the zero
// polynomial.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    IntPolynomial(std::initializer_list<std::int64_t> ascending);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial constant(BigInt c);
    // c * x^k
    static IntPolynomial monomial(std::size_t k, BigInt c = BigInt(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    // Coefficient of x^k; zero beyond the degree.
    const BigInt& coeff(std::size_t k) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;
    BigRational evaluate(const BigRational& x) const;
    int sign_at(const BigRational& x) const { return evaluate(x).sign(); }

    IntPolynomial derivative() const;
    // Non-negative gcd of the coefficients; 0 for the zero polynomial.
    BigInt content() const;
    // Content removed; sign of the leading coefficient preserved.
    IntPolynomial primitive_part() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    // Lexicographic by descending power, matching the scan order used by
    // the coefficient-box search.
    static bool lex_less(const IntPolynomial& a, const IntPolynomial& b);

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Polynomial with exact rational coefficients; carrier for division
// results and intermediate Sturm-chain arithmetic.
struct RationalPolynomial {
    std::vector<BigRational> coeffs;  // ascending, trailing zeros trimmed

    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> ascending);
    explicit RationalPolynomial(const IntPolynomial& p);

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigRational evaluate(const BigRational& x) const;
    void trim();

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;
};

// Exact division with remainder over the rationals. q must be nonzero;
// p = q*quotient + remainder with deg remainder < deg q.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const IntPolynomial& p,
                                                         const IntPolynomial& q);
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& p,
                                                         const RationalPolynomial& q);

// Integer division with remainder; q must be monic.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& p,
                                                     const IntPolynomial& q);

// True iff d divides p exactly over the integers (d nonzero).
bool divides(const IntPolynomial& d, const IntPolynomial& p);

// Exact quotient p / d; throws when d does not divide p.
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& d);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p') with content removed and positive leading coefficient:
// same distinct roots as p, all simple. p must be nonzero.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Converts when every coefficient is an integer; throws otherwise.
IntPolynomial to_int_polynomial(const RationalPolynomial& p);

// Scales by the lcm of the coefficient denominators and removes content:
// the primitive integer polynomial with the same roots; sign preserved.
IntPolynomial primitive_scale(const RationalPolynomial& p);

}  // namespace exactrig

#endif
