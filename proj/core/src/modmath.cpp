#include "glp/modmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace glp {

u64 mul_mod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // This base set is known to be exact for all n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

u64 mod_inverse(u64 y, u64 p) {
    if (p < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    const u64 r = y % p;
    if (r == 0) throw std::invalid_argument("mod_inverse: argument divisible by modulus");
    i64 t0 = 0, t1 = 1;
    u64 r0 = p, r1 = r;
    while (r1 != 0) {
        const u64 q = r0 / r1;
        const i64 t2 = t0 - static_cast<i64>(q) * t1;
        t0 = t1;
        t1 = t2;
        const u64 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: argument not invertible");
    i64 inv = t0 % static_cast<i64>(p);
    if (inv < 0) inv += static_cast<i64>(p);
    return static_cast<u64>(inv);
}

namespace {

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

u32 PrimeContext::log_of(u64 x) const {
    const u64 r = x % p;
    if (r == 0) throw std::invalid_argument("log_of: argument divisible by p");
    return dlog[r];
}

PrimeContext make_context(u64 p, u64 max_p) {
    if (!is_prime(p)) throw std::invalid_argument("make_context: p must be prime");
    if (p < 3) throw std::invalid_argument("make_context: p must be an odd prime");
    if (p > max_p) throw std::length_error("make_context: p exceeds the dense-table limit");
    if (p > 0xFFFFFFFFull) throw std::length_error("make_context: p too large for a 32-bit table");

    PrimeContext ctx;
    ctx.p = p;

    const std::vector<u64> fs = prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool primitive = true;
        for (u64 q : fs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            ctx.g = g;
            break;
        }
    }

    ctx.dlog.assign(p, 0);
    u64 cur = 1;
    for (u64 k = 0; k < p - 1; ++k) {
        ctx.dlog[cur] = static_cast<u32>(k);
        cur = mul_mod(cur, ctx.g, p);
    }
    return ctx;
}

SubgroupCoset subgroup(const PrimeContext& ctx, u64 m) {
    const u64 p = ctx.p;
    if (m == 0 || (p - 1) % m != 0)
        throw std::invalid_argument("subgroup: order must divide p-1");
    const u64 gen = pow_mod(ctx.g, (p - 1) / m, p);
    SubgroupCoset u;
    u.ctx = &ctx;
    u.order = m;
    u.rep = 1;
    u.elements.reserve(m);
    u64 cur = 1;
    for (u64 t = 0; t < m; ++t) {
        u.elements.push_back(cur);
        cur = mul_mod(cur, gen, p);
    }
    std::sort(u.elements.begin(), u.elements.end());
    return u;
}

SubgroupCoset coset(const SubgroupCoset& u, u64 v) {
    const u64 p = u.p();
    if (v == 0 || v >= p) throw std::invalid_argument("coset: need 1 <= v <= p-1");
    SubgroupCoset c;
    c.ctx = u.ctx;
    c.order = u.order;
    c.rep = mul_mod(u.rep, v, p);
    c.elements.reserve(u.elements.size());
    for (u64 e : u.elements) c.elements.push_back(mul_mod(e, v, p));
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

NearestIntDistance nearest_int_distance(i64 z, u64 p) {
    if (p == 0) throw std::invalid_argument("nearest_int_distance: p must be positive");
    i64 r = z % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    const u64 ru = static_cast<u64>(r);
    return NearestIntDistance{std::min(ru, p - ru), p};
}

}  // namespace glp
