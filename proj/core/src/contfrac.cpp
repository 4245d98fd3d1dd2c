#include "glp/contfrac.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glp {

namespace {

void require_valid(u64 a, u64 p) {
    if (p < 2) throw std::invalid_argument("continued_fraction: need p >= 2");
    if (a == 0 || a >= p) throw std::invalid_argument("continued_fraction: need 1 <= a < p");
    if (std::gcd(a, p) != 1) throw std::invalid_argument("continued_fraction: need gcd(a, p) = 1");
}

}  // namespace

ContinuedFraction continued_fraction(u64 a, u64 p) {
    require_valid(a, p);
    ContinuedFraction cf;
    cf.a = a;
    cf.p = p;

    // Euclid on (p, a) yields the quotients of a/p after the leading 0.
    // Because gcd = 1, the loop ends on remainder 1 and the final quotient
    // is automatically >= 2 whenever the expansion has length >= 2.
    u64 num = p, den = a;
    u64 pm1 = 1, pm0 = 0;  // p_{n-1}, p_n
    u64 qm1 = 0, qm0 = 1;  // q_{n-1}, q_n
    while (den != 0) {
        const u64 b = num / den;
        const u64 r = num % den;
        cf.quotients.push_back(b);
        const u64 pn = b * pm0 + pm1;
        const u64 qn = b * qm0 + qm1;
        cf.convergents.emplace_back(pn, qn);
        pm1 = pm0;
        pm0 = pn;
        qm1 = qm0;
        qm0 = qn;
        num = den;
        den = r;
    }
    return cf;
}

u64 sum_quotients(const ContinuedFraction& cf) {
    u64 s = 0;
    for (u64 b : cf.quotients) s += b;
    return s;
}

u64 max_quotient(const ContinuedFraction& cf) {
    u64 m = 0;
    for (u64 b : cf.quotients) m = std::max(m, b);
    return m;
}

QuotientStats quotient_stats(u64 a, u64 p) {
    require_valid(a, p);
    QuotientStats s;
    u64 num = p, den = a;
    while (den != 0) {
        const u64 b = num / den;
        const u64 r = num % den;
        ++s.length;
        s.sum += b;
        s.max = std::max(s.max, b);
        num = den;
        den = r;
    }
    return s;
}

LegendreCheck legendre_criterion(u64 a, u64 p, u64 b, u64 x) {
    require_valid(a, p);
    if (x == 0) throw std::invalid_argument("legendre_criterion: need x >= 1");

    using i128 = __int128;
    i128 diff = static_cast<i128>(a) * x - static_cast<i128>(b) * p;
    if (diff < 0) diff = -diff;

    LegendreCheck out;
    // |a/p - b/x| < 1/(2 x^2)  <=>  2 x |a x - b p| < p, exactly.
    out.within_bound = 2 * static_cast<i128>(x) * diff < static_cast<i128>(p);

    const u64 g = std::gcd(b, x);
    const u64 bn = (b == 0) ? 0 : b / g;
    const u64 xn = (b == 0) ? 1 : x / g;
    if (bn == 0 && xn == 1) {
        out.is_convergent = true;  // the 0th convergent 0/1
    } else {
        const ContinuedFraction cf = continued_fraction(a, p);
        for (const auto& [pn, qn] : cf.convergents) {
            if (pn == bn && qn == xn) {
                out.is_convergent = true;
                break;
            }
        }
    }
    return out;
}

ConvergentGap convergent_gap(const ContinuedFraction& cf, std::size_t n) {
    const std::size_t l = cf.length();
    if (n < 1 || n >= l)
        throw std::out_of_range("convergent_gap: need 1 <= n <= l-1");

    const u64 pn = cf.convergents[n - 1].first;
    const u64 qn = cf.convergents[n - 1].second;
    const u64 qn1 = cf.convergents[n].second;

    using u128 = unsigned __int128;
    const u128 low_den = static_cast<u128>(qn) * (qn + qn1);
    const u128 up_den = static_cast<u128>(qn) * qn1;
    const u128 act_den = static_cast<u128>(cf.p) * qn;
    if (low_den > UINT64_MAX || act_den > UINT64_MAX)
        throw std::overflow_error("convergent_gap: denominator exceeds 64 bits");

    using i128 = __int128;
    i128 diff = static_cast<i128>(cf.a) * qn - static_cast<i128>(pn) * cf.p;
    if (diff < 0) diff = -diff;

    ConvergentGap gap;
    gap.lower = Rational::reduced(1, static_cast<u64>(low_den));
    gap.actual = Rational::reduced(static_cast<u64>(diff), static_cast<u64>(act_den));
    gap.upper = Rational::reduced(1, static_cast<u64>(up_den));
    gap.upper_attained = (gap.actual == gap.upper);
    return gap;
}

}  // namespace glp
