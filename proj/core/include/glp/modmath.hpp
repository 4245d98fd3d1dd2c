#pragma once

#include <cstdint>
#include <vector>

#include "glp/rational.hpp"

namespace glp {

// Deterministic Miller-Rabin, valid for every 64-bit n.
bool is_prime(u64 n);

u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 base, u64 exp, u64 p);

// gcd-based inverse; works without a context. y need not be reduced mod p.
u64 mod_inverse(u64 y, u64 p);

// Dense discrete-logarithm table for one odd prime p, built from the least
// primitive root. The table costs O(p) memory, so construction is capped.
inline constexpr u64 kDefaultDlogLimit = 2'000'000;

struct PrimeContext {
    u64 p = 0;                // odd prime
    u64 g = 0;                // least primitive root mod p
    std::vector<u32> dlog;    // dlog[x] = k with g^k = x, for 1 <= x <= p-1

    u32 log_of(u64 x) const;  // rejects x = 0 mod p
};

PrimeContext make_context(u64 p, u64 max_p = kDefaultDlogLimit);

inline u64 mod_inverse(u64 y, const PrimeContext& ctx) { return mod_inverse(y, ctx.p); }

// A coset v*U of the order-m multiplicative subgroup U of Z_p^*.
// Elements are kept sorted ascending; rep is the translating element.
struct SubgroupCoset {
    const PrimeContext* ctx = nullptr;
    u64 order = 0;
    u64 rep = 1;
    std::vector<u64> elements;

    u64 p() const { return ctx->p; }
};

// Subgroup of order m (requires m | p-1), i.e. the image of x -> x^((p-1)/m).
SubgroupCoset subgroup(const PrimeContext& ctx, u64 m);

// Translate a coset by v, 1 <= v <= p-1.
SubgroupCoset coset(const SubgroupCoset& u, u64 v);

// Distance from z/p to the nearest integer, held exactly as m_hat / p
// (deliberately unreduced so callers can read off m_hat).
struct NearestIntDistance {
    u64 num = 0;  // m_hat = min(z mod p, p - z mod p), in [0, p/2]
    u64 den = 1;  // p

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational rational() const { return Rational::reduced(num, den); }
};

NearestIntDistance nearest_int_distance(i64 z, u64 p);

inline NearestIntDistance nearest_int_distance(i64 z, const PrimeContext& ctx) {
    return nearest_int_distance(z, ctx.p);
}

}  // namespace glp
