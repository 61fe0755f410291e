#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chebx/poly.hpp"
#include "support/oracles.hpp"

using namespace chebx;
using chebx::testing::random_nonzero_poly;
using chebx::testing::random_poly;
using chebx::testing::RatPoly;

namespace {
const IntPoly kZero;
}

TEST_CASE("canonical form") {
    CHECK(IntPoly({Int(0), Int(0)}).is_zero());
    CHECK(IntPoly({Int(1), Int(2), Int(0)}) == IntPoly({Int(1), Int(2)}));
    CHECK_FALSE(IntPoly::x().is_zero());
    CHECK_FALSE(kZero.degree().has_value());
    CHECK(*IntPoly::one().degree() == 0);
    CHECK(*IntPoly::monomial(Int(3), 5).degree() == 5);
    CHECK(IntPoly::monomial(Int(0), 5).is_zero());
    CHECK(IntPoly::constant(Int(0)).is_zero());
}

TEST_CASE("addition") {
    const IntPoly p{Int(1), Int(1)};         // 1 + X
    CHECK(p + IntPoly{Int(0), Int(-1)} == IntPoly::one());
    CHECK(p + kZero == p);
    CHECK(IntPoly{Int(-1), Int(0), Int(2)} + IntPoly::one() == IntPoly::monomial(Int(2), 2));
}

TEST_CASE("multiplication") {
    const IntPoly xp1{Int(1), Int(1)};
    const IntPoly xm1{Int(-1), Int(1)};
    CHECK(xp1 * xm1 == IntPoly{Int(-1), Int(0), Int(1)});
    CHECK(xp1 * kZero == kZero);
    CHECK(IntPoly::monomial(Int(2), 1) * IntPoly{Int(-1), Int(0), Int(2)} ==
          IntPoly{Int(0), Int(-2), Int(0), Int(4)});
}

TEST_CASE("derivative") {
    CHECK(derivative(IntPoly::monomial(Int(1), 3)) == IntPoly::monomial(Int(3), 2));
    CHECK(derivative(IntPoly::constant(Int(7))) == kZero);
    CHECK(derivative(kZero) == kZero);
    // T_2' = 4X, which is 2 U_1
    CHECK(derivative(IntPoly{Int(-1), Int(0), Int(2)}) == IntPoly::monomial(Int(4), 1));
}

TEST_CASE("compose") {
    const IntPoly two_x_m1{Int(-1), Int(2)};
    CHECK(compose(IntPoly::monomial(Int(1), 2), two_x_m1) == IntPoly{Int(1), Int(-4), Int(4)});
    CHECK(compose(two_x_m1, IntPoly::x()) == two_x_m1);
    CHECK(compose(IntPoly::x(), two_x_m1) == two_x_m1);
    CHECK(compose(kZero, two_x_m1) == kZero);
}

TEST_CASE("rational evaluation") {
    const IntPoly p{Int(-1), Int(0), Int(4)};  // 4X^2 - 1
    CHECK(eval_rat(p, Rat(1, 2)) == Rat(0));
    CHECK(eval_rat(p, Rat(2)) == Rat(15));
    CHECK(eval_rat(kZero, Rat(5, 3)) == Rat(0));
    CHECK(eval_int(p, Int(3)) == Int(35));
    CHECK(sign_at(p, Rat(1, 3)) < 0);
    CHECK(sign_at(p, Rat(1, 2)) == 0);
    CHECK(sign_at(p, Rat(-1)) > 0);
}

TEST_CASE("eval_rat matches naive Horner over Q") {
    std::mt19937_64 rng(20260808);
    std::uniform_int_distribution<long> small(-12, 12);
    for (int iter = 0; iter < 300; ++iter) {
        const IntPoly p = random_poly(rng, 9, 30);
        long den = small(rng);
        if (den == 0) den = 1;
        const Rat x(small(rng), den);
        CAPTURE(p.to_string());
        CAPTURE(x.to_string());
        CHECK(eval_rat(p, x) == RatPoly::from(p).eval(x));
        CHECK(sign_at(p, x) == RatPoly::from(p).eval(x).sign());
    }
}

TEST_CASE("exact division") {
    const IntPoly x2m1{Int(-1), Int(0), Int(1)};
    CHECK(exact_div(x2m1, IntPoly{Int(-1), Int(1)}) == IntPoly{Int(1), Int(1)});
    CHECK(exact_div(IntPoly{Int(0), Int(-3), Int(0), Int(4)}, IntPoly::x()) ==
          IntPoly{Int(-3), Int(0), Int(4)});
    CHECK_THROWS_AS(exact_div(IntPoly{Int(1), Int(0), Int(1)}, IntPoly::x()), NotDivisible);
    CHECK_THROWS_AS(exact_div(IntPoly{Int(1), Int(1)}, IntPoly{Int(1), Int(2)}), NotDivisible);
    CHECK_THROWS_AS(exact_div(IntPoly::x(), kZero), ZeroPolynomial);
    CHECK(exact_div(kZero, IntPoly::x()) == kZero);
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = content_primitive(IntPoly{Int(-2), Int(4)});
    CHECK(c1 == 2);
    CHECK(p1 == IntPoly{Int(-1), Int(2)});

    auto [c2, p2] = content_primitive(IntPoly::monomial(Int(-6), 2));
    CHECK(c2 == 6);
    CHECK(p2 == IntPoly::monomial(Int(-1), 2));

    // 8X^4 - 8X^2 + 1 is already primitive
    const IntPoly t4{Int(1), Int(0), Int(-8), Int(0), Int(8)};
    auto [c3, p3] = content_primitive(t4);
    CHECK(c3 == 1);
    CHECK(p3 == t4);

    CHECK_THROWS_AS(content_primitive(kZero), ZeroPolynomial);
}

TEST_CASE("polynomial gcd") {
    CHECK(gcd_poly(IntPoly::one(), IntPoly::x()) == IntPoly::one());
    CHECK(gcd_poly(IntPoly{Int(-1), Int(0), Int(1)}, IntPoly{Int(1), Int(-2), Int(1)}) ==
          IntPoly{Int(-1), Int(1)});
    const IntPoly p{Int(4), Int(0), Int(-6)};
    CHECK(gcd_poly(p, p) == IntPoly{Int(-2), Int(0), Int(3)});
    CHECK(gcd_poly(p, kZero) == IntPoly{Int(-2), Int(0), Int(3)});
    CHECK_THROWS_AS(gcd_poly(kZero, kZero), BothZero);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        const IntPoly a = random_poly(rng, 6, 20);
        const IntPoly b = random_poly(rng, 6, 20);
        const IntPoly c = random_poly(rng, 6, 20);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == kZero);
        CHECK(a + kZero == a);
        CHECK(a * IntPoly::one() == a);
    }
}

TEST_CASE("composition laws on random polynomials") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> small(-6, 6);
    for (int iter = 0; iter < 60; ++iter) {
        const IntPoly p = random_poly(rng, 5, 10);
        const IntPoly q = random_poly(rng, 3, 6);
        CHECK(compose(p, IntPoly::x()) == p);
        long den = small(rng);
        if (den == 0) den = 2;
        const Rat x(small(rng), den);
        CHECK(eval_rat(compose(p, q), x) == eval_rat(p, eval_rat(q, x)));
    }
}

TEST_CASE("gcd divides both arguments and respects common factors") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 80) {
        const IntPoly p = random_nonzero_poly(rng, 5, 10);
        const IntPoly q = random_nonzero_poly(rng, 5, 10);
        const IntPoly g = gcd_poly(p, q);
        CHECK(exact_div(p, g) * g == p);
        CHECK(exact_div(q, g) * g == q);

        const IntPoly r = random_nonzero_poly(rng, 3, 6);
        IntPoly rprim = content_primitive(r).second;
        if (sgn(rprim.leading()) < 0) rprim = -rprim;
        CHECK(gcd_poly(p * r, q * r) == rprim * g);
        ++done;
    }
}

TEST_CASE("pseudo remainder is a scaled true remainder") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 100; ++iter) {
        const IntPoly a = random_nonzero_poly(rng, 7, 15);
        const IntPoly b = random_nonzero_poly(rng, 4, 15);
        if (a.is_zero() || b.is_zero() || *a.degree() < *b.degree()) continue;
        const IntPoly r = pseudo_rem(a, b);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
        // lc(b)^(da-db+1) * a = s*b + r for the quotient s recovered by
        // exact division.
        const unsigned long e = static_cast<unsigned long>(*a.degree() - *b.degree()) + 1;
        const IntPoly scaled = pow_int(b.leading(), e) * a;
        const IntPoly s = exact_div(scaled - r, b);
        CHECK(s * b + r == scaled);
    }
}
