#pragma once

#include <cstdint>
#include <vector>

#include "glp/contfrac.hpp"
#include "glp/rational.hpp"

namespace glp {

// The p points xi_x = (x/p, {a x / p}) for x = 0..p-1.  Both coordinate
// sequences are permutations of {0/p, ..., (p-1)/p}.
struct LatticePointSet {
    u64 p = 0;
    u64 a = 0;
    std::vector<std::uint32_t> second;  // second[x] = a*x mod p
};

LatticePointSet make_point_set(u64 p, u64 a);

enum class BoxMode { closed, open };

// Number of points in [0, g1] x [0, g2] (closed) or [0, g1) x [0, g2) (open),
// with the containment decided by exact integer cross-multiplication.
u64 count_box(const LatticePointSet& set, const Rational& g1, const Rational& g2, BoxMode mode);

struct BoxCorner {
    Rational gamma1;
    Rational gamma2;
    BoxMode mode = BoxMode::closed;
};

// Unnormalized two-dimensional discrepancy
//   D_p(a) = sup over boxes of |N_p(g1, g2) - g1 g2 p|,
// an exact rational with denominator p.  The supremum is realized on the
// critical grid {x/p : x = 0..p-1} union {1}: closed corners maximize
// N - g1 g2 p, open corners (limits from below) maximize g1 g2 p - N.
struct DiscrepancyReport {
    u64 p = 0;
    u64 a = 0;
    Rational d_exact;        // the discrepancy, reduced
    BoxCorner argmax;        // first maximizing corner in scan order
    u64 quotient_sum = 0;    // sum of partial quotients of a/p
    double cf_bound = 0.0;   // bound_constant * (quotient_sum + 1)
};

// Constant for the quotient-sum discrepancy bound D_p(a) <= C * (sum b_i + 1).
inline constexpr double kCfBoundConstant = 3.0;

// The exact scan costs O(p^2) time and O(p) memory, hence the size cap.
inline constexpr u64 kDefaultExactLimit = 20'000;

DiscrepancyReport discrepancy_exact(const LatticePointSet& set, u64 max_p = kDefaultExactLimit);

double discrepancy_bound(const ContinuedFraction& cf);

}  // namespace glp
