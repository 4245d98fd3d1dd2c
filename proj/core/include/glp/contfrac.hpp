#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "glp/rational.hpp"

namespace glp {

// Canonical continued fraction a/p = [0; b_1, ..., b_l] with b_l >= 2 when
// l >= 2, plus the convergent sequence p_n/q_n for n = 1..l.  The recurrence
// is q_{n+1} = b_{n+1} q_n + q_{n-1} with q_0 = 1, q_{-1} = 0 (and p_0 = 0,
// p_{-1} = 1), so p_l = a and q_l = p exactly.
struct ContinuedFraction {
    u64 a = 0;
    u64 p = 0;
    std::vector<u64> quotients;                    // b_1..b_l
    std::vector<std::pair<u64, u64>> convergents;  // (p_n, q_n), n = 1..l

    std::size_t length() const { return quotients.size(); }
};

// Expand a/p for 1 <= a < p, gcd(a, p) = 1.
ContinuedFraction continued_fraction(u64 a, u64 p);

u64 sum_quotients(const ContinuedFraction& cf);
u64 max_quotient(const ContinuedFraction& cf);

// Length, sum and max of the partial quotients without building the vectors;
// same Euclid loop as continued_fraction.
struct QuotientStats {
    u64 length = 0;
    u64 sum = 0;
    u64 max = 0;
};

QuotientStats quotient_stats(u64 a, u64 p);

// Classical best-approximation criterion: if |a/p - b/x| < 1/(2 x^2) then the
// reduced b/x is a convergent of a/p.  Both facts are decided exactly by
// integer cross-multiplication; within_bound == true must imply is_convergent.
struct LegendreCheck {
    bool within_bound = false;   // 2 x |a x - b p| < p
    bool is_convergent = false;  // reduced b/x is 0/1 or some p_n/q_n
};

LegendreCheck legendre_criterion(u64 a, u64 p, u64 b, u64 x);

// Two-sided error bound around convergent n (1-based, n < l):
//   1/(q_n (q_n + q_{n+1}))  <  |a/p - p_n/q_n|  <=  1/(q_n q_{n+1}),
// where the upper bound is attained exactly at n = l-1 (the expansion
// terminates) and is strict for n <= l-2.  All three values are exact.
struct ConvergentGap {
    Rational lower;
    Rational actual;
    Rational upper;
    bool upper_attained = false;
};

ConvergentGap convergent_gap(const ContinuedFraction& cf, std::size_t n);

}  // namespace glp
