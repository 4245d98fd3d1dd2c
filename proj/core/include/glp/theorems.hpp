#pragma once

#include <cstdint>

#include "glp/contfrac.hpp"
#include "glp/lattice.hpp"
#include "glp/modmath.hpp"
#include "glp/rational.hpp"

namespace glp {

// Approximation level of the pair (a, x): the largest c >= 1 such that
// ||a x / p|| <= 1/(c x), i.e. floor(p / (x * m_hat)) with m_hat the nearest-
// integer distance numerator of a x mod p; 0 when even c = 1 fails.
u64 approx_level(u64 p, u64 a, u64 x);

// Sum of approx_level(p, a, x) over x = 1..p-1.  Always >= sum of the partial
// quotients of a/p minus 5 ln p.
u64 approx_level_sum(u64 p, u64 a);

// #{ (a, x) : a in R, 1 <= x <= p-1, approx_level(p, a, x) >= c }.
u64 approx_level_count(const SubgroupCoset& R, u64 c);

// If a x = y (mod p) has no solution with (x, |y|) in the level-t rectangle
// family, then every x has ||a x / p|| > 1/(x t), and hence every partial
// quotient of a/p is < t.  The check evaluates all three statements.
struct QuotientBoundCheck {
    u64 solutions = 0;        // hyperbolic solution count at level t
    bool distances_large = false;  // all x: ||a x / p|| > 1/(x t)   (when solutions == 0)
    bool quotients_small = false;  // max partial quotient < t        (when solutions == 0)
    bool implication_holds = true;
};

QuotientBoundCheck quotient_bound_implication(u64 p, u64 a, double t);

// Fraction of a in R whose partial quotients all stay below t = 16 ln p.
struct SmallQuotientFraction {
    u64 count = 0;
    u64 size = 0;
    double threshold = 0.0;  // 16 ln p

    Rational fraction() const { return Rational::reduced(count, size); }
    double value() const { return static_cast<double>(count) / static_cast<double>(size); }
};

SmallQuotientFraction small_quotient_fraction(const SubgroupCoset& R);

// Minimize the quotient sum of a/p over a in R; ties go to the smallest a.
// The reference bound is 500 ln p ln ln p.
struct MinSumSearch {
    u64 best_a = 0;
    u64 best_sum = 0;
    u64 best_max = 0;     // largest partial quotient of the winner
    double bound = 0.0;   // 500 ln p ln ln p
    bool within_bound = false;
};

MinSumSearch min_quotient_sum_search(const SubgroupCoset& R);

// D_p(a) / (ln p ln ln p), with the discrepancy computed exactly.
double discrepancy_ratio(u64 p, u64 a, u64 max_p_exact = kDefaultExactLimit);

// Size thresholds under which the two coset statements above are guaranteed:
// majority needs #R >= 10^5 p^(7/8) (ln p)^(3/2), the minimum-sum search
// needs #R >= 10^8 p^(7/8) (ln p)^(5/2).  At desk scale both flags are
// normally false; the conclusions are tested empirically anyway.
struct SizeHypotheses {
    double majority_threshold = 0.0;
    double search_threshold = 0.0;
    bool majority = false;
    bool search = false;
};

SizeHypotheses size_hypotheses(u64 p, u64 size_r);

// One-stop summary for a coset, as emitted by the command line tool.
struct CosetReport {
    u64 p = 0;
    u64 order = 0;
    u64 rep = 1;
    SmallQuotientFraction fraction;
    MinSumSearch search;
    SizeHypotheses hypotheses;
    bool has_ratio = false;
    double ratio = 0.0;  // discrepancy ratio of the search winner
};

CosetReport coset_report(const SubgroupCoset& R, bool with_discrepancy = false,
                         u64 max_p_exact = kDefaultExactLimit);

}  // namespace glp
