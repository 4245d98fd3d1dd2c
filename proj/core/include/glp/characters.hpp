#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "glp/modmath.hpp"

namespace glp {

using cplx = std::complex<double>;

// The p-1 Dirichlet characters mod p: chi_j(x) = exp(2 pi i j dlog(x)/(p-1)),
// with chi_j(x) = 0 whenever p | x (for every j, including the principal
// character j = 0).  Values come from one shared table of (p-1)st roots of
// unity, so equal angles give bit-identical complex values.
class CharacterSystem {
  public:
    explicit CharacterSystem(const PrimeContext& ctx);

    const PrimeContext& context() const { return *ctx_; }
    u64 p() const { return ctx_->p; }

    // chi_j(x); x may be negative or >= p and is reduced mod p first.
    cplx value(u64 j, i64 x) const;

  private:
    const PrimeContext* ctx_;
    std::vector<cplx> roots_;  // roots_[k] = exp(2 pi i k / (p-1))
};

struct Character {
    const CharacterSystem* sys = nullptr;
    u64 index = 0;  // j in [0, p-2]

    cplx operator()(i64 x) const { return sys->value(index, x); }
    bool principal() const { return index == 0; }
    u64 p() const { return sys->p(); }
};

inline Character character(const CharacterSystem& sys, u64 j) { return Character{&sys, j}; }

// Sum_{x=1..N} chi(x), accumulated in ascending order of x.
cplx interval_sum(const Character& chi, u64 N);

// Fully explicit short-sum bound for non-principal chi:
//   |sum_{x<=N} chi(x)| <= 30 N^(1-1/r) p^((r+1)/(4 r^2)) (ln p)^(1/r).
double burgess_bound(u64 p, u64 N, unsigned r);

// Dyadic rectangle cover of the hyperbolic region { (x,y) : x y <= p/c }:
// with k = sqrt(2p/c) and j minimal with 2^j k >= p,
//   level 0:        [1, k] x [1, k]
//   level nu >= 1:  (2^(nu-1) k, 2^nu k] x [1, k/2^nu]
//   level -nu:      the transpose.
// Integer endpoints below are the lattice points of those half-open ranges;
// the 2j+1 rectangles are pairwise disjoint and cover every integer pair
// (x, y) with 1 <= x, y < p and x y <= p/c.
struct PiRectangle {
    int nu = 0;
    i64 x_lo = 1, x_hi = 0;  // inclusive; empty when lo > hi
    i64 y_lo = 1, y_hi = 0;

    bool empty() const { return x_lo > x_hi || y_lo > y_hi; }
    u64 point_count() const {
        return empty() ? 0 : static_cast<u64>(x_hi - x_lo + 1) * static_cast<u64>(y_hi - y_lo + 1);
    }
};

struct RectangleFamily {
    u64 p = 0;
    double c = 0.0;
    double k = 0.0;  // sqrt(2p/c), rounded up by one ulp so coverage is airtight
    int levels = 0;  // j
    std::vector<PiRectangle> rects;  // ordered nu = -j..j
};

RectangleFamily rectangle_family(u64 p, double c);

// Factorized bilinear sum over the family for non-principal chi:
//   sum over rectangles of (sum_x chi(x)) * conj(sum_y chi(y)).
cplx bilinear_char_sum(const RectangleFamily& fam, const Character& chi);

// Explicit bound 10^4 p^(7/8) (ln p)^2 / sqrt(c) for the bilinear sum.
double bilinear_sum_bound(u64 p, double c);

// delta: 1 if p | z else 0.
inline int is_multiple(i64 z, u64 p) { return z % static_cast<i64>(p) == 0 ? 1 : 0; }

// Number of pairs (x, y), x >= 1, y a nonzero integer, with (x, |y|) in the
// family and a x = y (mod p); y must be invertible, so columns with p | a x
// contribute nothing.  Counted exactly with integer arithmetic.
u64 solution_count(const RectangleFamily& fam, u64 a);
u64 solution_count(u64 p, u64 a, double t);

// The same count through the character identity
//   S(a) = 1/(p-1) sum_j chi_j(a) sum_{(x,|y|)} chi_j(x) conj(chi_j(y)),
// the inner sum running over both signs of y.  Building the per-character
// inner sums once lets many values of a reuse them.
class PiCharacterSums {
  public:
    PiCharacterSums(const CharacterSystem& sys, const RectangleFamily& fam);

    cplx inner(u64 j) const { return inner_[j]; }
    double solution_count_chars(u64 a) const;

  private:
    const CharacterSystem* sys_;
    std::vector<cplx> inner_;
};

double solution_count_chars(const CharacterSystem& sys, const RectangleFamily& fam, u64 a);

}  // namespace glp
