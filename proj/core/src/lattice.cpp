#include "glp/lattice.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace glp {

LatticePointSet make_point_set(u64 p, u64 a) {
    if (p < 2 || p > 0xFFFFFFFFull) throw std::invalid_argument("make_point_set: bad p");
    if (a == 0 || a >= p) throw std::invalid_argument("make_point_set: need 1 <= a < p");
    LatticePointSet set;
    set.p = p;
    set.a = a;
    set.second.resize(p);
    u64 r = 0;
    for (u64 x = 0; x < p; ++x) {
        set.second[x] = static_cast<std::uint32_t>(r);
        r += a;
        if (r >= p) r -= p;
    }
    return set;
}

u64 count_box(const LatticePointSet& set, const Rational& g1, const Rational& g2, BoxMode mode) {
    if (g1.num > g1.den || g2.num > g2.den)
        throw std::invalid_argument("count_box: box bounds must lie in [0, 1]");
    using u128 = unsigned __int128;
    const u64 p = set.p;
    const u128 lim1 = static_cast<u128>(g1.num) * p;
    const u128 lim2 = static_cast<u128>(g2.num) * p;
    u64 n = 0;
    if (mode == BoxMode::closed) {
        for (u64 x = 0; x < p; ++x) {
            if (static_cast<u128>(x) * g1.den <= lim1 &&
                static_cast<u128>(set.second[x]) * g2.den <= lim2)
                ++n;
        }
    } else {
        for (u64 x = 0; x < p; ++x) {
            if (static_cast<u128>(x) * g1.den < lim1 &&
                static_cast<u128>(set.second[x]) * g2.den < lim2)
                ++n;
        }
    }
    return n;
}

namespace {

// Insert val into the sorted prefix w[0..count), returning the new count.
inline std::size_t sorted_insert(double* w, std::size_t count, double val) {
    double* pos = std::upper_bound(w, w + count, val);
    std::memmove(pos + 1, pos, (w + count - pos) * sizeof(double));
    *pos = val;
    return count + 1;
}

}  // namespace

DiscrepancyReport discrepancy_exact(const LatticePointSet& set, u64 max_p) {
    const u64 p = set.p;
    if (p > max_p)
        throw std::length_error(
            "discrepancy_exact: p exceeds the exact-scan limit; use the quotient-sum bound");

    // Incremental corner scan.  After inserting the second coordinates of the
    // points x <= u into the sorted array w (all values are exact small
    // integers stored as doubles), the best closed corner with gamma1 = u/p is
    //   max_i ((i+1) p - u w_i)          at (u/p, w_i/p),
    // and the best open corner with gamma1 = (u+1)/p is
    //   max_i ((u+1) w_i - i p)          at ((u+1)/p, w_i/p),
    // both maxima taken over the box count realized just left/below the jump.
    // Every quantity stays below 2 p^2 < 2^53, so double arithmetic is exact.
    std::vector<double> w(p), ramp(p);
    const double dp = static_cast<double>(p);
    for (u64 i = 0; i < p; ++i) ramp[i] = static_cast<double>(i) * dp;

    double best = 0.0;
    u64 best_u = 0;
    BoxMode best_mode = BoxMode::closed;

    std::size_t count = 0;
    for (u64 u = 0; u < p; ++u) {
        count = sorted_insert(w.data(), count, static_cast<double>(set.second[u]));
        const double du = static_cast<double>(u);
        const double du1 = du + 1.0;
        double mc = -1.0, mo = -1.0;
#pragma omp simd reduction(max : mc, mo)
        for (std::size_t i = 0; i < count; ++i) {
            mc = std::max(mc, ramp[i] - du * w[i]);
            mo = std::max(mo, du1 * w[i] - ramp[i]);
        }
        if (dp + mc > best) {
            best = dp + mc;
            best_u = u;
            best_mode = BoxMode::closed;
        }
        if (mo > best) {
            best = mo;
            best_u = u;
            best_mode = BoxMode::open;
        }
    }

    // Recover the maximizing gamma2 for the winning step: rebuild the sorted
    // prefix up to best_u and take the first index attaining the maximum.
    count = 0;
    for (u64 u = 0; u <= best_u; ++u)
        count = sorted_insert(w.data(), count, static_cast<double>(set.second[u]));
    const i64 best_i64 = static_cast<i64>(best);
    const i64 ip = static_cast<i64>(p);
    u64 best_w = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const i64 wi = static_cast<i64>(w[i]);
        const i64 val = (best_mode == BoxMode::closed)
                            ? static_cast<i64>(i + 1) * ip - static_cast<i64>(best_u) * wi
                            : static_cast<i64>(best_u + 1) * wi - static_cast<i64>(i) * ip;
        if (val == best_i64) {
            best_w = static_cast<u64>(wi);
            break;
        }
    }

    DiscrepancyReport rep;
    rep.p = p;
    rep.a = set.a;
    rep.d_exact = Rational::reduced(static_cast<u64>(best_i64), p);
    if (best_mode == BoxMode::closed) {
        rep.argmax.gamma1 = Rational::reduced(best_u, p);
    } else {
        rep.argmax.gamma1 = Rational::reduced(best_u + 1, p);
    }
    rep.argmax.gamma2 = Rational::reduced(best_w, p);
    rep.argmax.mode = best_mode;

    const QuotientStats qs = quotient_stats(set.a, p);
    rep.quotient_sum = qs.sum;
    rep.cf_bound = kCfBoundConstant * (static_cast<double>(qs.sum) + 1.0);
    return rep;
}

double discrepancy_bound(const ContinuedFraction& cf) {
    return kCfBoundConstant * (static_cast<double>(sum_quotients(cf)) + 1.0);
}

}  // namespace glp
