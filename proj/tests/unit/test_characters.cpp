#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "glp/characters.hpp"
#include "glp/modmath.hpp"
#include "oracle.hpp"

using namespace glp;

namespace {

std::vector<std::pair<i64, i64>> rect_points(const PiRectangle& r) {
    std::vector<std::pair<i64, i64>> pts;
    if (r.empty()) return pts;
    for (i64 x = r.x_lo; x <= r.x_hi; ++x)
        for (i64 y = r.y_lo; y <= r.y_hi; ++y) pts.emplace_back(x, y);
    return pts;
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("character values from the discrete log table") {
    const PrimeContext ctx = make_context(7);  // generator 3
    const CharacterSystem sys(ctx);
    const Character chi3 = character(sys, 3);  // the quadratic character
    CHECK(std::abs(chi3(3) - cplx(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(chi3(2) - cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(chi3(9) - chi3(2)) == 0.0);  // reduction mod p, same table entry
    CHECK(std::abs(chi3(-5) - chi3(2)) == 0.0);
    for (u64 j = 0; j < 6; ++j) {
        CHECK(sys.value(j, 0) == cplx(0.0, 0.0));   // vanishes on multiples of p
        CHECK(sys.value(j, 7) == cplx(0.0, 0.0));
        CHECK(sys.value(j, -7) == cplx(0.0, 0.0));
        CHECK(sys.value(j, 1) == cplx(1.0, 0.0));
        // chi_j(-1) = (-1)^j for p = 7
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(sys.value(j, -1) - cplx(sign, 0.0)) < 1e-12);
    }
}

TEST_CASE("multiplicativity and orthogonality") {
    const PrimeContext ctx = make_context(101);
    const CharacterSystem sys(ctx);
    for (u64 j : {0ull, 1ull, 5ull, 50ull, 99ull}) {
        for (u64 x = 1; x < 101; x += 7)
            for (u64 y = 1; y < 101; y += 11)
                CHECK(std::abs(sys.value(j, static_cast<i64>(x * y)) -
                               sys.value(j, static_cast<i64>(x)) * sys.value(j, static_cast<i64>(y))) < 1e-12);
        // sum over the group vanishes except for the principal character
        cplx s(0.0, 0.0);
        for (u64 x = 1; x < 101; ++x) s += sys.value(j, static_cast<i64>(x));
        if (j == 0)
            CHECK(std::abs(s - cplx(100.0, 0.0)) < 1e-9);
        else
            CHECK(std::abs(s) < 1e-9);
    }
    // dual orthogonality: sum over characters at a fixed argument
    for (u64 x : {1ull, 2ull, 55ull}) {
        cplx s(0.0, 0.0);
        for (u64 j = 0; j < 100; ++j) s += sys.value(j, static_cast<i64>(x));
        if (x == 1)
            CHECK(std::abs(s - cplx(100.0, 0.0)) < 1e-9);
        else
            CHECK(std::abs(s) < 1e-9);
    }
}

TEST_CASE("order-2 character matches Euler's criterion") {
    const PrimeContext ctx = make_context(101);
    const CharacterSystem sys(ctx);
    const Character chi = character(sys, 50);  // j = (p-1)/2
    for (u64 x = 1; x < 101; ++x) {
        const double legendre = pow_mod(x, 50, 101) == 1 ? 1.0 : -1.0;
        CHECK(std::abs(chi(static_cast<i64>(x)) - cplx(legendre, 0.0)) < 1e-12);
    }
}

TEST_CASE("interval sums") {
    const PrimeContext ctx = make_context(7);
    const CharacterSystem sys(ctx);
    CHECK(std::abs(interval_sum(character(sys, 3), 3) - cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(interval_sum(character(sys, 0), 6) - cplx(6.0, 0.0)) < 1e-12);
    CHECK(std::abs(interval_sum(character(sys, 0), 7) - cplx(6.0, 0.0)) < 1e-12);  // chi(7) = 0
    for (u64 j = 1; j < 6; ++j) CHECK(std::abs(interval_sum(character(sys, j), 6)) < 1e-12);
}

TEST_CASE("short-sum bound: frozen values and domination") {
    CHECK(burgess_bound(101, 10, 2) == doctest::Approx(484.1980493795863));
    CHECK(burgess_bound(101, 10, 3) == doctest::Approx(387.15479731666676));
    CHECK_THROWS_AS(burgess_bound(101, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(burgess_bound(101, 0, 2), std::invalid_argument);
    // the bound really does dominate every short sum at desk scale
    const PrimeContext ctx = make_context(499);
    const CharacterSystem sys(ctx);
    for (u64 j : {1ull, 7ull, 249ull}) {
        const Character chi = character(sys, j);
        cplx s(0.0, 0.0);
        for (u64 N = 1; N <= 498; ++N) {
            s += chi(static_cast<i64>(N));
            for (unsigned r : {1u, 2u, 3u}) CHECK(std::abs(s) <= burgess_bound(499, N, r));
        }
    }
}

TEST_CASE("rectangle family: frozen geometry") {
    const RectangleFamily fam = rectangle_family(101, 2.0);
    CHECK(fam.k == doctest::Approx(10.04987562112089).epsilon(1e-13));
    CHECK(fam.levels == 4);
    REQUIRE(fam.rects.size() == 9);
    const auto expect = [&](int idx, int nu, i64 xl, i64 xh, i64 yl, i64 yh) {
        const PiRectangle& r = fam.rects[static_cast<std::size_t>(idx)];
        CHECK(r.nu == nu);
        CHECK(r.x_lo == xl);
        CHECK(r.x_hi == xh);
        CHECK(r.y_lo == yl);
        CHECK(r.y_hi == yh);
    };
    expect(0, -4, 1, 0, 81, 160);  // empty: short side collapsed
    expect(1, -3, 1, 1, 41, 80);
    expect(2, -2, 1, 2, 21, 40);
    expect(3, -1, 1, 5, 11, 20);
    expect(4, 0, 1, 10, 1, 10);
    expect(5, 1, 11, 20, 1, 5);
    expect(6, 2, 21, 40, 1, 2);
    expect(7, 3, 41, 80, 1, 1);
    expect(8, 4, 81, 160, 1, 0);
    CHECK(fam.rects[0].empty());
    CHECK(fam.rects[0].point_count() == 0);
    CHECK(fam.rects[4].point_count() == 100);

    const RectangleFamily tiny = rectangle_family(101, 73.85);
    CHECK(tiny.levels == 6);
    REQUIRE(tiny.rects.size() == 13);
    CHECK(tiny.rects[6].nu == 0);
    CHECK(tiny.rects[6].x_hi == 1);
    CHECK(tiny.rects[6].y_hi == 1);
    for (int i = 0; i < 13; ++i)
        if (i != 6) CHECK(tiny.rects[static_cast<std::size_t>(i)].empty());

    CHECK_THROWS_AS(rectangle_family(10, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(rectangle_family(101, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(rectangle_family(101, 102.0), std::invalid_argument);
}

TEST_CASE("family transpose symmetry") {
    for (double c : {1.0, 2.0, 7.5, 31.4}) {
        const RectangleFamily fam = rectangle_family(997, c);
        const int j = fam.levels;
        REQUIRE(fam.rects.size() == static_cast<std::size_t>(2 * j + 1));
        for (int nu = 1; nu <= j; ++nu) {
            const PiRectangle& pos = fam.rects[static_cast<std::size_t>(j + nu)];
            const PiRectangle& neg = fam.rects[static_cast<std::size_t>(j - nu)];
            CHECK(pos.x_lo == neg.y_lo);
            CHECK(pos.x_hi == neg.y_hi);
            CHECK(pos.y_lo == neg.x_lo);
            CHECK(pos.y_hi == neg.x_hi);
        }
    }
}

TEST_CASE("family covers the hyperbolic region exactly once") {
    for (const auto& [p, c] : std::vector<std::pair<u64, double>>{
             {7, 2.0}, {101, 2.0}, {101, 7.5}, {997, 110.33}, {997, 2.0}}) {
        const RectangleFamily fam = rectangle_family(p, c);
        const oracle::Geometry g = oracle::geometry(p, c);
        CHECK(g.k == fam.k);  // both round the same way, bit for bit
        CHECK(g.j == fam.levels);
        // every integer point of the region lies in exactly one level
        for (const auto& [x, y] : oracle::hyperbolic_points(p, c)) {
            int hits = 0;
            for (const PiRectangle& r : fam.rects)
                if (x >= r.x_lo && x <= r.x_hi && y >= r.y_lo && y <= r.y_hi) ++hits;
            CHECK(hits == 1);
            CHECK(oracle::containing_levels(g, x, y) == 1);
        }
        // each level's integer points match the real-bounds oracle exactly
        for (const PiRectangle& r : fam.rects) {
            auto lib = rect_points(r);
            auto ref = oracle::level_points(g, r.nu);
            std::sort(lib.begin(), lib.end());
            std::sort(ref.begin(), ref.end());
            CHECK(lib == ref);
        }
    }
}

TEST_CASE("hyperbolic solution counts: frozen values and oracle sweep") {
    CHECK(solution_count(7, 3, 2.0) == 4);
    CHECK(solution_count(7, 1, 2.0) == 2);
    CHECK(solution_count(7, 6, 2.0) == 2);
    CHECK(solution_count(13, 5, 3.0) == 2);
    CHECK(solution_count(13, 1, 3.0) == 2);
    for (u64 p : {7ull, 13ull, 31ull}) {
        for (double c : {1.0, 2.0, 3.3, 7.0}) {
            const RectangleFamily fam = rectangle_family(p, c);
            for (u64 a = 1; a < p; ++a)
                CHECK(solution_count(fam, a) == oracle::solution_count(p, a, c));
        }
    }
    CHECK_THROWS_AS(solution_count(7, 0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(solution_count(7, 7, 2.0), std::invalid_argument);
}

TEST_CASE("bilinear sums: factorized equals point-by-point, bound holds") {
    const PrimeContext ctx = make_context(101);
    const CharacterSystem sys(ctx);
    for (double c : {2.0, 7.5}) {
        const RectangleFamily fam = rectangle_family(101, c);
        for (u64 j = 1; j < 100; j += 9) {
            const cplx lib = bilinear_char_sum(fam, character(sys, j));
            const cplx ref = oracle::bilinear_sum(sys, j, 101, c);
            CHECK(std::abs(lib - ref) < 1e-8);
            CHECK(std::abs(lib) <= bilinear_sum_bound(101, c));
        }
        CHECK_THROWS_AS(bilinear_char_sum(fam, character(sys, 0)), std::invalid_argument);
    }
    const PrimeContext ctx7 = make_context(7);
    const CharacterSystem sys7(ctx7);
    CHECK_THROWS_AS(bilinear_char_sum(rectangle_family(101, 2.0), character(sys7, 1)),
                    std::invalid_argument);
}

TEST_CASE("character identity recovers the integer solution count") {
    for (const auto& [p, c] : std::vector<std::pair<u64, double>>{{13, 3.0}, {101, 5.0}}) {
        const PrimeContext ctx = make_context(p);
        const CharacterSystem sys(ctx);
        const RectangleFamily fam = rectangle_family(p, c);
        const PiCharacterSums sums(sys, fam);
        for (u64 a = 1; a < p; ++a) {
            const double via_chars = sums.solution_count_chars(a);
            const u64 direct = solution_count(fam, a);
            CHECK(std::abs(via_chars - static_cast<double>(direct)) < 1e-6);
            CHECK(static_cast<u64>(std::llround(via_chars)) == direct);
        }
        CHECK(solution_count_chars(sys, fam, 1) ==
              doctest::Approx(static_cast<double>(solution_count(fam, 1))).epsilon(1e-9));
    }
}

TEST_CASE("multiple-of-p indicator") {
    CHECK(is_multiple(0, 7) == 1);
    CHECK(is_multiple(14, 7) == 1);
    CHECK(is_multiple(-21, 7) == 1);
    CHECK(is_multiple(5, 7) == 0);
    CHECK(is_multiple(-5, 7) == 0);
}

}  // TEST_SUITE
