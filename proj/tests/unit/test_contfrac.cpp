#include <doctest.h>

#include <cmath>

#include "glp/contfrac.hpp"
#include "glp/modmath.hpp"

using namespace glp;

namespace {

std::vector<u64> odd_primes_up_to(u64 n) {
    std::vector<u64> ps;
    for (u64 v = 3; v <= n; ++v)
        if (is_prime(v)) ps.push_back(v);
    return ps;
}

// Fold [0; b_1..b_l] back into a fraction, exactly, from the tail.
std::pair<u64, u64> fold_back(const std::vector<u64>& bs) {
    u64 num = 1, den = bs.back();
    for (std::size_t i = bs.size() - 1; i-- > 0;) {
        // 1/(b_i + num/den) = den / (b_i den + num)
        const u64 nden = bs[i] * den + num;
        num = den;
        den = nden;
    }
    return {num, den};
}

}  // namespace

TEST_SUITE("contfrac") {

TEST_CASE("expansion examples") {
    CHECK(continued_fraction(1, 7).quotients == std::vector<u64>{7});
    CHECK(continued_fraction(3, 7).quotients == std::vector<u64>{2, 3});
    const ContinuedFraction cf = continued_fraction(5, 13);
    CHECK(cf.quotients == std::vector<u64>{2, 1, 1, 2});
    CHECK(cf.convergents ==
          std::vector<std::pair<u64, u64>>{{1, 2}, {1, 3}, {2, 5}, {5, 13}});
    CHECK(sum_quotients(cf) == 6);
    CHECK(max_quotient(cf) == 2);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(continued_fraction(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(continued_fraction(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(continued_fraction(9, 7), std::invalid_argument);
    CHECK_THROWS_AS(continued_fraction(2, 4), std::invalid_argument);  // gcd > 1
}

TEST_CASE("canonical form and reconstruction, small corpus") {
    for (u64 p : odd_primes_up_to(311)) {
        for (u64 a = 1; a < p; ++a) {
            const ContinuedFraction cf = continued_fraction(a, p);
            const std::size_t l = cf.length();
            REQUIRE(l >= 1);
            if (l >= 2) CHECK(cf.quotients.back() >= 2);  // canonical terminal quotient
            // final convergent reproduces a/p exactly
            CHECK(cf.convergents.back().first == a);
            CHECK(cf.convergents.back().second == p);
            // denominators strictly increase after q_1 >= 1
            for (std::size_t n = 1; n < l; ++n)
                CHECK(cf.convergents[n].second > cf.convergents[n - 1].second);
            // independent reconstruction by folding from the tail
            const auto [num, den] = fold_back(cf.quotients);
            CHECK(num == a);
            CHECK(den == p);
            // length bound l <= 5 ln p
            CHECK(static_cast<double>(l) <= 5.0 * std::log(static_cast<double>(p)));
            // streaming stats agree with the materialized expansion
            const QuotientStats qs = quotient_stats(a, p);
            CHECK(qs.length == l);
            CHECK(qs.sum == sum_quotients(cf));
            CHECK(qs.max == max_quotient(cf));
        }
    }
}

TEST_CASE("approximation criterion examples") {
    // (3, 7): 1/2 approximates to within 1/8 < 1/2: bound holds, 1/2 is a convergent
    const LegendreCheck c1 = legendre_criterion(3, 7, 1, 2);
    CHECK(c1.within_bound);
    CHECK(c1.is_convergent);
    // (5, 13): 2/5 with |5/13 - 2/5| = 1/65 < 1/50
    const LegendreCheck c2 = legendre_criterion(5, 13, 2, 5);
    CHECK(c2.within_bound);
    CHECK(c2.is_convergent);
    // (5, 13): 3/8 is close but not within 1/(2*64); no claim
    const LegendreCheck c3 = legendre_criterion(5, 13, 3, 8);
    CHECK_FALSE(c3.within_bound);
    CHECK_THROWS_AS(legendre_criterion(3, 7, 1, 0), std::invalid_argument);
}

TEST_CASE("criterion implication on a dense sweep") {
    for (u64 p : odd_primes_up_to(101)) {
        for (u64 a = 1; a < p; ++a) {
            for (u64 x = 1; x <= 2 * p; ++x) {
                // nearest numerator candidate makes the bound non-vacuous often
                const u64 b = (2 * a * x + p) / (2 * p);
                const LegendreCheck chk = legendre_criterion(a, p, b, x);
                if (chk.within_bound) CHECK(chk.is_convergent);
            }
        }
    }
}

TEST_CASE("convergent gap examples") {
    const ContinuedFraction cf513 = continued_fraction(5, 13);
    const ConvergentGap g2 = convergent_gap(cf513, 2);
    CHECK(g2.lower == Rational::reduced(1, 24));
    CHECK(g2.actual == Rational::reduced(2, 39));
    CHECK(g2.upper == Rational::reduced(1, 15));
    CHECK_FALSE(g2.upper_attained);

    const ContinuedFraction cf37 = continued_fraction(3, 7);
    const ConvergentGap g1 = convergent_gap(cf37, 1);
    CHECK(g1.lower == Rational::reduced(1, 18));
    CHECK(g1.actual == Rational::reduced(1, 14));
    CHECK(g1.upper == Rational::reduced(1, 14));
    CHECK(g1.upper_attained);

    CHECK_THROWS_AS(convergent_gap(continued_fraction(1, 7), 1), std::out_of_range);
    CHECK_THROWS_AS(convergent_gap(cf513, 4), std::out_of_range);
    CHECK_THROWS_AS(convergent_gap(cf513, 0), std::out_of_range);
}

TEST_CASE("convergent gaps: strict interior, attained at the last step") {
    for (u64 p : odd_primes_up_to(499)) {
        for (u64 a = 1; a < p; ++a) {
            const ContinuedFraction cf = continued_fraction(a, p);
            const std::size_t l = cf.length();
            for (std::size_t n = 1; n < l; ++n) {
                const ConvergentGap g = convergent_gap(cf, n);
                CHECK(g.lower < g.actual);
                CHECK(g.actual <= g.upper);
                if (n + 1 < l)
                    CHECK(g.actual < g.upper);
                else
                    CHECK(g.upper_attained);  // terminating expansions attain it
            }
        }
    }
}

TEST_CASE("denominator distance inequality, exact") {
    // ||a q_n / p|| * q_{n+1} < p for n <= l-2, = p at n = l-1 (where the
    // distance is exactly 1/p), and q_{n+1} >= b_{n+1} q_n throughout.
    for (u64 p : odd_primes_up_to(2000)) {
        for (u64 a = 1; a < p; ++a) {
            const ContinuedFraction cf = continued_fraction(a, p);
            const std::size_t l = cf.length();
            for (std::size_t n = 1; n < l; ++n) {
                const u64 qn = cf.convergents[n - 1].second;
                const u64 qn1 = cf.convergents[n].second;
                const u64 m_hat = nearest_int_distance(static_cast<i64>(mul_mod(a, qn, p)), p).num;
                const unsigned __int128 lhs = static_cast<unsigned __int128>(m_hat) * qn1;
                if (n + 1 < l)
                    CHECK(lhs < p);
                else
                    CHECK(lhs == p);
                CHECK(qn1 >= cf.quotients[n] * qn);
            }
        }
    }
}

}  // TEST_SUITE
