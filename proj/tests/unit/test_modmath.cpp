#include <doctest.h>

#include <algorithm>
#include <set>

#include "glp/modmath.hpp"

using namespace glp;

namespace {

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> ps;
    for (u64 v = 2; v <= n; ++v)
        if (is_prime(v)) ps.push_back(v);
    return ps;
}

}  // namespace

TEST_SUITE("modmath") {

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK(is_prime(1999));
    CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));    // Carmichael
    CHECK_FALSE(is_prime(6));
    CHECK_FALSE(is_prime(UINT64_MAX));
}

TEST_CASE("least primitive root") {
    CHECK(make_context(3).g == 2);
    CHECK(make_context(5).g == 2);
    CHECK(make_context(7).g == 3);
    CHECK(make_context(13).g == 2);
    CHECK(make_context(191).g == 19);
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(make_context(6), std::invalid_argument);
    CHECK_THROWS_AS(make_context(2), std::invalid_argument);
    CHECK_THROWS_AS(make_context(9), std::invalid_argument);
    CHECK_THROWS_AS(make_context(2000003, 2000000), std::length_error);
}

TEST_CASE("dlog table is the inverse of exponentiation") {
    for (u64 p : primes_up_to(500)) {
        if (p == 2) continue;
        const PrimeContext ctx = make_context(p);
        CHECK(ctx.dlog[1] == 0);
        CHECK(ctx.log_of(ctx.g) == 1);
        std::set<u32> seen;
        for (u64 x = 1; x < p; ++x) {
            const u32 k = ctx.log_of(x);
            CHECK(pow_mod(ctx.g, k, p) == x);
            seen.insert(k);
        }
        CHECK(seen.size() == p - 1);  // bijection onto [0, p-2]
        CHECK_THROWS_AS(ctx.log_of(0), std::invalid_argument);
        CHECK_THROWS_AS(ctx.log_of(p), std::invalid_argument);
    }
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(1, 7ull) == 1);
    CHECK(mod_inverse(6, 7ull) == 6);
    CHECK(mod_inverse(3, 7ull) == 5);
    CHECK_THROWS_AS(mod_inverse(0, 7ull), std::invalid_argument);
    CHECK_THROWS_AS(mod_inverse(14, 7ull), std::invalid_argument);
    for (u64 p : {101ull, 499ull}) {
        for (u64 y = 1; y < p; ++y) {
            const u64 inv = mod_inverse(y, p);
            CHECK(mul_mod(y, inv, p) == 1);
            CHECK(mod_inverse(inv, p) == y);
        }
    }
}

TEST_CASE("subgroup examples") {
    const PrimeContext c7 = make_context(7);
    CHECK(subgroup(c7, 6).elements == std::vector<u64>{1, 2, 3, 4, 5, 6});
    CHECK(subgroup(c7, 3).elements == std::vector<u64>{1, 2, 4});
    const PrimeContext c13 = make_context(13);
    CHECK(subgroup(c13, 4).elements == std::vector<u64>{1, 5, 8, 12});
    CHECK_THROWS_AS(subgroup(c13, 5), std::invalid_argument);
    CHECK_THROWS_AS(subgroup(c13, 0), std::invalid_argument);
}

TEST_CASE("subgroups are closed and have exact order") {
    for (u64 p : primes_up_to(500)) {
        if (p == 2) continue;
        const PrimeContext ctx = make_context(p);
        for (u64 m = 1; m <= p - 1; ++m) {
            if ((p - 1) % m != 0) continue;
            const SubgroupCoset u = subgroup(ctx, m);
            REQUIRE(u.elements.size() == m);
            const std::set<u64> members(u.elements.begin(), u.elements.end());
            CHECK(members.count(1) == 1);
            for (u64 x : u.elements)
                for (u64 y : u.elements) CHECK(members.count(mul_mod(x, y, p)) == 1);
        }
    }
}

TEST_CASE("coset translation") {
    const PrimeContext c7 = make_context(7);
    const SubgroupCoset u = subgroup(c7, 3);
    const SubgroupCoset v = coset(u, 3);
    CHECK(v.elements == std::vector<u64>{3, 5, 6});
    CHECK(v.rep == 3);
    CHECK(coset(u, 1).elements == u.elements);
    // translating the full group is a permutation
    const SubgroupCoset full = subgroup(c7, 6);
    CHECK(coset(full, 3).elements == full.elements);
    CHECK_THROWS_AS(coset(u, 0), std::invalid_argument);
    CHECK_THROWS_AS(coset(u, 7), std::invalid_argument);
}

TEST_CASE("distinct cosets partition the group") {
    for (u64 p : primes_up_to(200)) {
        if (p == 2) continue;
        const PrimeContext ctx = make_context(p);
        for (u64 m = 1; m <= p - 1; ++m) {
            if ((p - 1) % m != 0) continue;
            const SubgroupCoset u = subgroup(ctx, m);
            std::set<std::vector<u64>> distinct;
            std::set<u64> covered;
            for (u64 v = 1; v < p; ++v) {
                const SubgroupCoset c = coset(u, v);
                distinct.insert(c.elements);
                covered.insert(c.elements.begin(), c.elements.end());
            }
            CHECK(distinct.size() == (p - 1) / m);
            CHECK(covered.size() == p - 1);
        }
    }
}

TEST_CASE("nearest integer distance") {
    CHECK(nearest_int_distance(6, 7ull).num == 1);
    CHECK(nearest_int_distance(10, 7ull).num == 3);
    CHECK(nearest_int_distance(10, 7ull).den == 7);
    CHECK(nearest_int_distance(7, 7ull).num == 0);
    CHECK(nearest_int_distance(-1, 7ull).num == 1);
    CHECK(nearest_int_distance(-13, 7ull).num == 1);
    for (u64 p : {101ull, 997ull}) {
        for (i64 z = -300; z <= 300; ++z) {
            const NearestIntDistance d = nearest_int_distance(z, p);
            CHECK(d.num <= p / 2);
            // symmetric: ||z/p|| = ||-z/p||
            CHECK(d.num == nearest_int_distance(-z, p).num);
        }
    }
}

}  // TEST_SUITE
