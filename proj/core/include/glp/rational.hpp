#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "glp/ints.hpp"

namespace glp {

// Exact nonnegative rational with a 64-bit numerator and denominator.
// Always stored in lowest terms with den > 0; comparisons cross-multiply
// in 128-bit arithmetic, so no value ever passes through floating point.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t n, std::uint64_t d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (n == 0) return Rational{0, 1};
        const std::uint64_t g = std::gcd(n, d);
        return Rational{n / g, d / g};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline int compare(const Rational& a, const Rational& b) {
    using u128 = unsigned __int128;
    const u128 lhs = static_cast<u128>(a.num) * b.den;
    const u128 rhs = static_cast<u128>(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

inline bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

}  // namespace glp
