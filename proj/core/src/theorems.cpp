#include "glp/theorems.hpp"

#include <cmath>
#include <stdexcept>

#include "glp/characters.hpp"

namespace glp {

namespace {

void require_pair(u64 p, u64 a, u64 x) {
    if (a == 0 || a >= p) throw std::invalid_argument("approx_level: need 1 <= a <= p-1");
    if (x == 0 || x >= p) throw std::invalid_argument("approx_level: need 1 <= x <= p-1");
}

}  // namespace

u64 approx_level(u64 p, u64 a, u64 x) {
    require_pair(p, a, x);
    const u64 m_hat = nearest_int_distance(static_cast<i64>(mul_mod(a, x, p)), p).num;
    const u64 xm = x * m_hat;  // < p^2, fits: p < 2^32
    if (xm > p) return 0;
    return p / xm;
}

u64 approx_level_sum(u64 p, u64 a) {
    if (a == 0 || a >= p) throw std::invalid_argument("approx_level_sum: need 1 <= a <= p-1");
    u64 total = 0;
    u64 r = 0;
    for (u64 x = 1; x < p; ++x) {
        r += a;
        if (r >= p) r -= p;
        const u64 m_hat = std::min(r, p - r);
        const u64 xm = x * m_hat;
        if (xm <= p) total += p / xm;
    }
    return total;
}

u64 approx_level_count(const SubgroupCoset& R, u64 c) {
    if (c == 0) throw std::invalid_argument("approx_level_count: need c >= 1");
    const u64 p = R.p();
    u64 total = 0;
    for (u64 a : R.elements) {
        u64 r = 0;
        for (u64 x = 1; x < p; ++x) {
            r += a;
            if (r >= p) r -= p;
            const u64 m_hat = std::min(r, p - r);
            const u64 xm = x * m_hat;
            if (xm <= p && c * xm <= p) ++total;
        }
    }
    return total;
}

QuotientBoundCheck quotient_bound_implication(u64 p, u64 a, double t) {
    if (!(t > 1.0)) throw std::invalid_argument("quotient_bound_implication: need t > 1");
    QuotientBoundCheck out;
    out.solutions = solution_count(p, a, t);
    if (out.solutions != 0) return out;  // nothing claimed; implication vacuously holds

    // ||a x / p|| > 1/(x t)  <=>  m_hat * x * t > p; m_hat * x < p^2 is exact
    // in long double, so only the single multiplication by t rounds.
    out.distances_large = true;
    u64 r = 0;
    for (u64 x = 1; x < p; ++x) {
        r += a;
        if (r >= p) r -= p;
        const u64 m_hat = std::min(r, p - r);
        const long double lhs = static_cast<long double>(m_hat) * x * static_cast<long double>(t);
        if (!(lhs > static_cast<long double>(p))) {
            out.distances_large = false;
            break;
        }
    }
    out.quotients_small = quotient_stats(a, p).max < t;
    out.implication_holds = out.distances_large && out.quotients_small;
    return out;
}

SmallQuotientFraction small_quotient_fraction(const SubgroupCoset& R) {
    const u64 p = R.p();
    SmallQuotientFraction f;
    f.threshold = 16.0 * std::log(static_cast<double>(p));
    f.size = R.elements.size();
    for (u64 a : R.elements) {
        if (static_cast<double>(quotient_stats(a, p).max) < f.threshold) ++f.count;
    }
    return f;
}

MinSumSearch min_quotient_sum_search(const SubgroupCoset& R) {
    const u64 p = R.p();
    if (p < 3) throw std::invalid_argument("min_quotient_sum_search: need p >= 3");
    MinSumSearch out;
    out.best_sum = UINT64_MAX;
    for (u64 a : R.elements) {  // ascending, so ties keep the smallest a
        const QuotientStats qs = quotient_stats(a, p);
        if (qs.sum < out.best_sum) {
            out.best_sum = qs.sum;
            out.best_a = a;
            out.best_max = qs.max;
        }
    }
    const double lp = std::log(static_cast<double>(p));
    out.bound = 500.0 * lp * std::log(lp);
    out.within_bound = static_cast<double>(out.best_sum) <= out.bound;
    return out;
}

double discrepancy_ratio(u64 p, u64 a, u64 max_p_exact) {
    const DiscrepancyReport rep = discrepancy_exact(make_point_set(p, a), max_p_exact);
    const double lp = std::log(static_cast<double>(p));
    return rep.d_exact.value() / (lp * std::log(lp));
}

SizeHypotheses size_hypotheses(u64 p, u64 size_r) {
    const double pd = static_cast<double>(p);
    const double lp = std::log(pd);
    SizeHypotheses h;
    h.majority_threshold = 1e5 * std::pow(pd, 7.0 / 8.0) * std::pow(lp, 1.5);
    h.search_threshold = 1e8 * std::pow(pd, 7.0 / 8.0) * std::pow(lp, 2.5);
    h.majority = static_cast<double>(size_r) >= h.majority_threshold;
    h.search = static_cast<double>(size_r) >= h.search_threshold;
    return h;
}

CosetReport coset_report(const SubgroupCoset& R, bool with_discrepancy, u64 max_p_exact) {
    CosetReport rep;
    rep.p = R.p();
    rep.order = R.order;
    rep.rep = R.rep;
    rep.fraction = small_quotient_fraction(R);
    rep.search = min_quotient_sum_search(R);
    rep.hypotheses = size_hypotheses(rep.p, R.elements.size());
    if (with_discrepancy && rep.p <= max_p_exact) {
        rep.has_ratio = true;
        rep.ratio = discrepancy_ratio(rep.p, rep.search.best_a, max_p_exact);
    }
    return rep;
}

}  // namespace glp
