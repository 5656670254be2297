#include "exactrig/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exactrig {

namespace {
const BigInt k_zero_int = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> ascending) {
    coeffs_.reserve(ascending.size());
    for (auto c : ascending) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(std::size_t k, BigInt c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : k_zero_int;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial{};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * BigInt(k);
    return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    if (g == 1) return *this;
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] / g;
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
    return IntPolynomial(std::move(out));
}

bool IntPolynomial::lex_less(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> ascending)
    : coeffs(std::move(ascending)) {
    trim();
}

RationalPolynomial::RationalPolynomial(const IntPolynomial& p) {
    coeffs.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) coeffs.emplace_back(c);
}

void RationalPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigRational RationalPolynomial::evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& p,
                                                         const RationalPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("polynomial division by zero");
    RationalPolynomial rem = p;
    if (p.degree() < q.degree()) return {RationalPolynomial{}, std::move(rem)};
    std::vector<BigRational> quot(p.degree() - q.degree() + 1, BigRational(0));
    const BigRational& lead = q.coeffs.back();
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        int shift = rem.degree() - q.degree();
        BigRational factor = rem.coeffs.back() / lead;
        quot[shift] = factor;
        for (int k = 0; k <= q.degree(); ++k)
            rem.coeffs[k + shift] -= factor * q.coeffs[k];
        rem.trim();
    }
    return {RationalPolynomial(std::move(quot)), std::move(rem)};
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const IntPolynomial& p,
                                                         const IntPolynomial& q) {
    return divmod(RationalPolynomial(p), RationalPolynomial(q));
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& p,
                                                     const IntPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (!q.is_monic()) throw std::invalid_argument("integer divmod requires a monic divisor");
    std::vector<BigInt> rem(p.coefficients());
    if (p.degree() < q.degree()) return {IntPolynomial{}, p};
    std::vector<BigInt> quot(p.degree() - q.degree() + 1, BigInt(0));
    int rdeg = p.degree();
    while (rdeg >= q.degree()) {
        BigInt factor = rem[rdeg];
        if (factor != 0) {
            int shift = rdeg - q.degree();
            quot[shift] = factor;
            for (int k = 0; k <= q.degree(); ++k) rem[k + shift] -= factor * q.coeff(k);
        }
        --rdeg;
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& d, const IntPolynomial& p) {
    if (d.is_zero()) throw std::invalid_argument("divisibility test against zero polynomial");
    if (p.is_zero()) return true;
    if (d.degree() > p.degree()) return false;
    auto [quot, rem] = divmod(p, d);
    if (!rem.is_zero()) return false;
    for (const auto& c : quot.coeffs)
        if (denominator(c) != 1) return false;
    return true;
}

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& d) {
    auto [quot, rem] = divmod(p, d);
    if (!rem.is_zero()) throw std::invalid_argument("exact_divide: nonzero remainder");
    return to_int_polynomial(quot);
}

IntPolynomial to_int_polynomial(const RationalPolynomial& p) {
    std::vector<BigInt> out;
    out.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
        if (denominator(c) != 1)
            throw std::invalid_argument("rational polynomial has non-integer coefficient");
        out.push_back(numerator(c));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial primitive_scale(const RationalPolynomial& p) {
    if (p.is_zero()) return IntPolynomial{};
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs) den_lcm = lcm(den_lcm, denominator(c));
    std::vector<BigInt> scaled;
    scaled.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) scaled.push_back(numerator(c) * (den_lcm / denominator(c)));
    return IntPolynomial(std::move(scaled)).primitive_part();
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return IntPolynomial{};
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        auto [quot, rem] = divmod(u, v);
        (void)quot;
        u = std::move(v);
        v = primitive_scale(rem);
    }
    if (!u.is_zero() && u.leading() < 0) u = -u;
    return u;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (p.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial g = poly_gcd(p, p.derivative());
    IntPolynomial q = exact_divide(p.primitive_part(), g).primitive_part();
    if (q.leading() < 0) q = -q;
    return q;
}

}  // namespace exactrig
