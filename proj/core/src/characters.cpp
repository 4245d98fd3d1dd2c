#include "glp/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace glp {

CharacterSystem::CharacterSystem(const PrimeContext& ctx) : ctx_(&ctx) {
    const u64 n = ctx.p - 1;
    roots_.resize(n);
    for (u64 k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        roots_[k] = std::polar(1.0, ang);
    }
}

cplx CharacterSystem::value(u64 j, i64 x) const {
    const u64 p = ctx_->p;
    i64 r = x % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    if (r == 0) return cplx(0.0, 0.0);
    const u64 k = (j * ctx_->dlog[static_cast<u64>(r)]) % (p - 1);
    return roots_[k];
}

cplx interval_sum(const Character& chi, u64 N) {
    cplx s(0.0, 0.0);
    for (u64 x = 1; x <= N; ++x) s += chi(static_cast<i64>(x));
    return s;
}

double burgess_bound(u64 p, u64 N, unsigned r) {
    if (r == 0) throw std::invalid_argument("burgess_bound: need r >= 1");
    if (N == 0) throw std::invalid_argument("burgess_bound: need N >= 1");
    const double rd = static_cast<double>(r);
    const double lp = std::log(static_cast<double>(p));
    return 30.0 * std::pow(static_cast<double>(N), 1.0 - 1.0 / rd) *
           std::pow(static_cast<double>(p), (rd + 1.0) / (4.0 * rd * rd)) * std::pow(lp, 1.0 / rd);
}

RectangleFamily rectangle_family(u64 p, double c) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("rectangle_family: p must be an odd prime");
    if (!(c >= 1.0) || !(c <= static_cast<double>(p)))
        throw std::invalid_argument("rectangle_family: need 1 <= c <= p");

    RectangleFamily fam;
    fam.p = p;
    fam.c = c;

    // Round k = sqrt(2p/c) upward so that x y <= p/c always implies
    // x y <= k^2 / 2 in double arithmetic; the coverage proof needs that.
    const long double kl = sqrtl(2.0L * static_cast<long double>(p) / static_cast<long double>(c));
    double k = static_cast<double>(kl);
    if (static_cast<long double>(k) < kl) k = std::nextafter(k, INFINITY);
    fam.k = k;

    int j = 0;
    double reach = k;
    while (reach < static_cast<double>(p)) {
        reach *= 2.0;  // exact: scaling by 2
        ++j;
    }
    fam.levels = j;
    if (2 * j + 1 > static_cast<int>(2.0 * std::log2(static_cast<double>(p)) + 3.0))
        throw std::logic_error("rectangle_family: level count exceeds 2 log2 p + 3");

    const auto fl = [](double v) { return static_cast<i64>(std::floor(v)); };
    fam.rects.reserve(2 * j + 1);
    for (int nu = -j; nu <= j; ++nu) {
        PiRectangle r;
        r.nu = nu;
        if (nu == 0) {
            r.x_lo = 1;
            r.x_hi = fl(k);
            r.y_lo = 1;
            r.y_hi = fl(k);
        } else {
            const int m = nu > 0 ? nu : -nu;
            const i64 long_lo = fl(std::ldexp(k, m - 1)) + 1;  // integers > 2^(m-1) k
            const i64 long_hi = fl(std::ldexp(k, m));
            const i64 short_hi = fl(std::ldexp(k, -m));
            if (nu > 0) {
                r.x_lo = long_lo;
                r.x_hi = long_hi;
                r.y_lo = 1;
                r.y_hi = short_hi;
            } else {
                r.x_lo = 1;
                r.x_hi = short_hi;
                r.y_lo = long_lo;
                r.y_hi = long_hi;
            }
        }
        fam.rects.push_back(r);
    }
    return fam;
}

namespace {

cplx range_sum(const Character& chi, i64 lo, i64 hi) {
    cplx s(0.0, 0.0);
    for (i64 x = lo; x <= hi; ++x) s += chi(x);
    return s;
}

}  // namespace

cplx bilinear_char_sum(const RectangleFamily& fam, const Character& chi) {
    if (chi.principal()) throw std::invalid_argument("bilinear_char_sum: principal character");
    if (chi.p() != fam.p) throw std::invalid_argument("bilinear_char_sum: modulus mismatch");
    cplx total(0.0, 0.0);
    for (const PiRectangle& r : fam.rects) {
        if (r.empty()) continue;
        const cplx cols = range_sum(chi, r.x_lo, r.x_hi);
        const cplx rows = range_sum(chi, r.y_lo, r.y_hi);
        total += cols * std::conj(rows);
    }
    return total;
}

double bilinear_sum_bound(u64 p, double c) {
    const double lp = std::log(static_cast<double>(p));
    return 1e4 * std::pow(static_cast<double>(p), 7.0 / 8.0) * lp * lp / std::sqrt(c);
}

namespace {

inline i64 floor_div(i64 n, i64 d) {
    i64 q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

// #{ w in [lo, hi] : w = r (mod p) }
inline u64 congruence_count(i64 lo, i64 hi, i64 r, i64 p) {
    if (lo > hi) return 0;
    return static_cast<u64>(floor_div(hi - r, p) - floor_div(lo - 1 - r, p));
}

}  // namespace

u64 solution_count(const RectangleFamily& fam, u64 a) {
    const u64 p = fam.p;
    if (a == 0 || a >= p) throw std::invalid_argument("solution_count: need 1 <= a <= p-1");
    const i64 ip = static_cast<i64>(p);
    u64 total = 0;
    for (const PiRectangle& rect : fam.rects) {
        if (rect.empty()) continue;
        i64 r = static_cast<i64>(mul_mod(a, static_cast<u64>(rect.x_lo) % p, p));
        const i64 step = static_cast<i64>(a);
        for (i64 x = rect.x_lo; x <= rect.x_hi; ++x) {
            if (r != 0) {
                total += congruence_count(rect.y_lo, rect.y_hi, r, ip);       // y = +|y|
                total += congruence_count(rect.y_lo, rect.y_hi, ip - r, ip);  // y = -|y|
            }
            r += step;
            if (r >= ip) r -= ip;
        }
    }
    return total;
}

u64 solution_count(u64 p, u64 a, double t) {
    return solution_count(rectangle_family(p, t), a);
}

PiCharacterSums::PiCharacterSums(const CharacterSystem& sys, const RectangleFamily& fam)
    : sys_(&sys) {
    if (sys.p() != fam.p) throw std::invalid_argument("PiCharacterSums: modulus mismatch");
    const u64 p = fam.p;
    const i64 ip = static_cast<i64>(p);
    inner_.assign(p - 1, cplx(0.0, 0.0));
    for (u64 j = 0; j + 1 < p; ++j) {
        cplx acc(0.0, 0.0);
        for (const PiRectangle& r : fam.rects) {
            if (r.empty()) continue;
            cplx cols(0.0, 0.0);
            for (i64 x = r.x_lo; x <= r.x_hi; ++x) cols += sys.value(j, x);
            cplx rows(0.0, 0.0);  // conj(chi(y)) + conj(chi(-y)) over the row range
            for (i64 y = r.y_lo; y <= r.y_hi; ++y)
                rows += std::conj(sys.value(j, y)) + std::conj(sys.value(j, ip - (y % ip)));
            acc += cols * rows;
        }
        inner_[j] = acc;
    }
}

double PiCharacterSums::solution_count_chars(u64 a) const {
    const u64 p = sys_->p();
    if (a == 0 || a >= p) throw std::invalid_argument("solution_count_chars: need 1 <= a <= p-1");
    cplx s(0.0, 0.0);
    for (u64 j = 0; j + 1 < p; ++j) s += sys_->value(j, static_cast<i64>(a)) * inner_[j];
    return s.real() / static_cast<double>(p - 1);
}

double solution_count_chars(const CharacterSystem& sys, const RectangleFamily& fam, u64 a) {
    return PiCharacterSums(sys, fam).solution_count_chars(a);
}

}  // namespace glp
