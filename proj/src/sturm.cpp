#include "exactrig/sturm.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace exactrig {

namespace {

// Sign changes across the chain evaluated at x, zeros skipped. Well
// defined whenever the first chain member does not vanish at x.
long sign_variations(const std::vector<IntPolynomial>& chain, const BigRational& x) {
    long variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// Removes a known rational root from a squarefree polynomial.
IntPolynomial deflate_root(const IntPolynomial& p, const BigRational& root) {
    // x - root, scaled to integer coefficients den*x - num.
    IntPolynomial linear(std::vector<BigInt>{-numerator(root), denominator(root)});
    return exact_divide(p.primitive_part(), linear.primitive_part());
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& squarefree) {
    std::vector<IntPolynomial> chain;
    chain.push_back(squarefree);
    if (squarefree.degree() < 1) return chain;
    chain.push_back(squarefree.derivative().primitive_part());
    while (chain.back().degree() > 0) {
        auto [quot, rem] = divmod(chain[chain.size() - 2], chain.back());
        (void)quot;
        if (rem.is_zero()) break;  // cannot happen for squarefree input
        // primitive_scale rescales by a positive rational only: signs survive.
        chain.push_back(-primitive_scale(rem));
    }
    return chain;
}

RootCount sturm_count(const IntPolynomial& p, const BigRational& lo, const BigRational& hi,
                      bool open_lo, bool open_hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    if (lo > hi) throw std::invalid_argument("root count over empty interval (lo > hi)");

    RootCount result;
    result.interval = RationalInterval{lo, hi, open_lo, open_hi};
    if (p.degree() == 0) return result;

    IntPolynomial q = squarefree_part(p);

    if (lo == hi) {
        if (!open_lo && !open_hi && q.sign_at(lo) == 0) result.count = 1;
        return result;
    }

    bool root_lo = q.sign_at(lo) == 0;
    bool root_hi = q.sign_at(hi) == 0;
    if (root_lo) q = deflate_root(q, lo);
    if (root_hi && q.degree() > 0 && q.sign_at(hi) == 0) q = deflate_root(q, hi);

    long interior = 0;
    if (q.degree() > 0) {
        auto chain = sturm_chain(q);
        interior = sign_variations(chain, lo) - sign_variations(chain, hi);
    }

    result.count = interior;
    if (root_lo && !open_lo) ++result.count;
    if (root_hi && !open_hi) ++result.count;
    return result;
}

BigRational cauchy_root_bound(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    BigInt max_abs = 0;
    for (int k = 0; k < p.degree(); ++k) {
        BigInt a = abs(p.coeff(k));
        if (a > max_abs) max_abs = a;
    }
    return 1 + make_rational(max_abs, abs(p.leading()));
}

long count_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    BigRational bound = cauchy_root_bound(p);
    return sturm_count(p, -bound, bound, true, true).count;
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");
    std::vector<RationalInterval> found;
    if (p.degree() == 0) return found;

    IntPolynomial q = squarefree_part(p);
    auto chain = sturm_chain(q);
    auto count_open = [&](const BigRational& a, const BigRational& b) {
        return sign_variations(chain, a) - sign_variations(chain, b);
    };

    struct Frame {
        BigRational lo, hi;
        long count;
    };
    BigRational bound = cauchy_root_bound(q);
    std::vector<Frame> stack;
    long total = count_open(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.count == 1) {
            found.push_back(RationalInterval{f.lo, f.hi, true, true});
            continue;
        }
        // Split at a non-root point so no root is lost at the seam.
        BigRational mid = (f.lo + f.hi) / 2;
        while (q.sign_at(mid) == 0) mid = (f.lo + mid) / 2;
        long cl = count_open(f.lo, mid);
        long cr = f.count - cl;
        if (cl > 0) stack.push_back({f.lo, mid, cl});
        if (cr > 0) stack.push_back({mid, f.hi, cr});
    }
    std::sort(found.begin(), found.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return found;
}

BigRational refine_root(const IntPolynomial& p, const RationalInterval& isolating,
                        const BigRational& width) {
    if (isolating.lo == isolating.hi) return isolating.lo;
    IntPolynomial q = squarefree_part(p);
    BigRational lo = isolating.lo, hi = isolating.hi;
    int sign_lo = q.sign_at(lo);
    // Squarefree with one simple root inside: endpoint signs differ.
    while (hi - lo > width) {
        BigRational mid = (lo + hi) / 2;
        int sm = q.sign_at(mid);
        if (sm == 0) return mid;
        if (sm == sign_lo) lo = mid; else hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace exactrig
