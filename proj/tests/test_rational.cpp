#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "chebx/rational_roots.hpp"
#include "support/oracles.hpp"

using namespace chebx;
using chebx::testing::random_poly;

namespace {

std::vector<Rat> rats(std::initializer_list<Rat> rs) {
    std::vector<Rat> v(rs);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("generic rational root search") {
    CHECK(rational_roots_generic(IntPoly{Int(-1), Int(0), Int(4)}) ==
          rats({Rat(-1, 2), Rat(1, 2)}));
    CHECK(rational_roots_generic(IntPoly{Int(-2), Int(0), Int(1)}).empty());
    CHECK(rational_roots_generic(IntPoly{Int(0), Int(-3), Int(0), Int(4)}) == rats({Rat(0)}));
    // (2X - 1)(3X + 2) X^2
    const IntPoly p = IntPoly{Int(-1), Int(2)} * IntPoly{Int(2), Int(3)} *
                      IntPoly::monomial(Int(1), 2);
    CHECK(rational_roots_generic(p) == rats({Rat(-2, 3), Rat(0), Rat(1, 2)}));
    CHECK(rational_roots_generic(IntPoly::constant(Int(5))).empty());
    CHECK_THROWS_AS(rational_roots_generic(IntPoly::zero()), ZeroPolynomial);
}

TEST_CASE("search is complete on constructed inputs") {
    // plant rational roots against factors with none
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    const IntPoly irrational_part[] = {
        IntPoly{Int(1), Int(0), Int(1)},    // X^2 + 1
        IntPoly{Int(-2), Int(0), Int(1)},   // X^2 - 2
        IntPoly{Int(1), Int(1), Int(0), Int(0), Int(1)},  // X^4 + X + 1
    };
    for (int iter = 0; iter < 120; ++iter) {
        const Rat r1(num(rng), den(rng));
        const Rat r2(num(rng), den(rng));
        IntPoly p = IntPoly{-r1.num(), r1.den()} * IntPoly{-r2.num(), r2.den()} *
                    irrational_part[static_cast<std::size_t>(iter) % 3];
        std::vector<Rat> want = {r1, r2};
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        CAPTURE(p.to_string());
        CHECK(rational_roots_generic(p) == want);
    }
}

TEST_CASE("every reported root evaluates to zero on random inputs") {
    std::mt19937_64 rng(2718);
    for (int iter = 0; iter < 150; ++iter) {
        const IntPoly p = random_poly(rng, 7, 25);
        if (p.is_zero()) continue;
        for (const Rat& r : rational_roots_generic(p)) {
            CHECK(eval_rat(p, r) == Rat(0));
        }
    }
}

TEST_CASE("expected classification") {
    CHECK(expected_rational_roots(ChebKind::SecondKind, 5) ==
          rats({Rat(0), Rat(-1, 2), Rat(1, 2)}));
    CHECK(expected_rational_roots(ChebKind::FirstKind, 8).empty());
    CHECK(expected_rational_roots(ChebKind::SecondKind, 3) == rats({Rat(0)}));
    CHECK(expected_rational_roots(ChebKind::FirstKind, 7) == rats({Rat(0)}));
    CHECK(expected_rational_roots(ChebKind::ShiftedFirstKind, 5) == rats({Rat(1, 2)}));
    CHECK(expected_rational_roots(ChebKind::ShiftedFirstKind, 2).empty());
}

TEST_CASE("U_5 factors as expected") {
    // 2X (4X^2 - 1)(4X^2 - 3), the brute factorization behind its roots
    ChebCache cache;
    const IntPoly u5 = IntPoly::monomial(Int(2), 1) * IntPoly{Int(-1), Int(0), Int(4)} *
                       IntPoly{Int(-3), Int(0), Int(4)};
    CHECK(u5 == cache.second_kind(5));
    CHECK(rational_roots_generic(u5) == rats({Rat(-1, 2), Rat(0), Rat(1, 2)}));
}

TEST_CASE("cross check on the three regimes") {
    ChebCache cache;
    const auto r1 = cross_check(ChebKind::FirstKind, 7, cache);
    CHECK(r1.agrees);
    CHECK(r1.computed == rats({Rat(0)}));

    const auto r2 = cross_check(ChebKind::SecondKind, 2, cache);
    CHECK(r2.agrees);
    CHECK(r2.computed == rats({Rat(-1, 2), Rat(1, 2)}));

    const auto r3 = cross_check(ChebKind::ShiftedFirstKind, 2, cache);
    CHECK(r3.agrees);
    CHECK(r3.computed.empty());
}

TEST_CASE("cross check agrees over a range") {
    ChebCache cache;
    for (std::size_t n = 1; n <= 40; ++n) {
        for (ChebKind kind :
             {ChebKind::FirstKind, ChebKind::SecondKind, ChebKind::ShiftedFirstKind}) {
            CAPTURE(n);
            CAPTURE(to_string(kind));
            CHECK(cross_check(kind, n, cache).agrees);
        }
    }
}

TEST_CASE("roots scale through the monic substitution") {
    ChebCache cache;
    for (std::size_t n = 1; n <= 24; ++n) {
        const auto raw = rational_roots_generic(cache.first_kind(n));
        auto scaled = rational_roots_generic(monic_transform(ChebKind::FirstKind, n, cache));
        for (Rat& r : scaled) r = r / Rat(2);
        std::sort(scaled.begin(), scaled.end());
        CHECK(raw == scaled);
    }
}

TEST_CASE("computed roots respect the root interval") {
    ChebCache cache;
    for (std::size_t n = 1; n <= 30; ++n) {
        for (ChebKind kind : {ChebKind::FirstKind, ChebKind::SecondKind}) {
            for (const Rat& r : rational_roots_generic(cache.get(kind, n))) {
                CHECK(Rat(-1) < r);
                CHECK(r < Rat(1));
            }
        }
        for (const Rat& r : rational_roots_generic(cache.shifted_first_kind(n))) {
            CHECK(Rat(0) < r);
            CHECK(r < Rat(1));
        }
    }
}
