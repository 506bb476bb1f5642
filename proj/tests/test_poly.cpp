#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ivp;
using ivp::test::P;

TEST(Integer, ValuationAndPrimes) {
    const Prime three(3);
    EXPECT_EQ(padic_valuation(Integer(162), three), Valuation(4u));
    EXPECT_EQ(padic_valuation(Integer(0), three), std::nullopt);
    EXPECT_EQ(padic_valuation(Integer(-9), three), Valuation(2u));
    EXPECT_THROW(Prime(15), InputError);
    EXPECT_THROW(Prime(1), InputError);
    EXPECT_TRUE(is_prime(Integer("1000000007")));
    EXPECT_FALSE(is_prime(Integer("1000000007") * 3));
}

TEST(Integer, FactorizationRebuildsTheNumber) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(1, 5'000'000'000LL);
    for (int trial = 0; trial < 200; ++trial) {
        const Integer n = dist(rng);
        Integer rebuilt = 1;
        for (const auto& [p, e] : factor_integer(n)) {
            EXPECT_TRUE(is_prime(p.value()));
            rebuilt *= pow(p.value(), e);
        }
        EXPECT_EQ(rebuilt, n);
    }
}

TEST(Integer, ModIsNonNegative) {
    EXPECT_EQ(mod(Integer(-7), Integer(5)), 3);
    EXPECT_EQ(mod(Integer(10), Integer(5)), 0);
}

TEST(IntPoly, BasicShape) {
    const IntPoly g{-19, 0, 0, 1};
    EXPECT_EQ(g.degree(), 3);
    EXPECT_EQ(g.leading(), 1);
    EXPECT_EQ(g(Integer(2)), -11);
    EXPECT_EQ(to_string(g), "x^3-19");
    EXPECT_EQ(to_string(IntPoly{0, 1, -2}), "-2*x^2+x");
    EXPECT_TRUE((IntPoly{0, 0}.is_zero()));
    EXPECT_EQ(IntPoly{}.degree(), -1);
}

TEST(IntPoly, ContentAndPrimitivePart) {
    const IntPoly g{-6, 0, -4};
    EXPECT_EQ(content(g), 2);
    EXPECT_EQ(primitive_part(g), (IntPoly{3, 0, 2}));
    EXPECT_FALSE(is_primitive(g));
    EXPECT_THROW(content(IntPoly{}), std::domain_error);
}

TEST(IntPoly, ExactDivision) {
    const IntPoly a = P("x^2+1"), b = P("x-5");
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_FALSE(divide_exact(a, b).has_value());
}

// Ring laws checked by evaluation at integer points: an independent route
// from the coefficient convolution.
TEST(IntPolyProperty, ProductMatchesPointwiseProduct) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPoly a = test::random_poly(rng, static_cast<int>(rng() % 5), 30);
        const IntPoly b = test::random_poly(rng, static_cast<int>(rng() % 5), 30);
        const IntPoly ab = a * b, s = a + b, d = a - b;
        for (int w = -4; w <= 4; ++w) {
            EXPECT_EQ(ab(Integer(w)), a(Integer(w)) * b(Integer(w)));
            EXPECT_EQ(s(Integer(w)), a(Integer(w)) + b(Integer(w)));
            EXPECT_EQ(d(Integer(w)), a(Integer(w)) - b(Integer(w)));
        }
        EXPECT_EQ(ab.degree(), a.degree() + b.degree());
        EXPECT_EQ(content(ab), content(a) * content(b));
    }
}

TEST(IntPolyProperty, EvalModAgreesWithEval) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = test::random_poly(rng, 4, 100);
        const Integer m = 2 + static_cast<long long>(rng() % 200);
        const Integer w = static_cast<long long>(rng() % 1000) - 500;
        EXPECT_EQ(a.eval_mod(w, m), mod(a(w), m));
    }
}

TEST(IntPolyProperty, ToStringRoundTrips) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = test::random_poly(rng, static_cast<int>(rng() % 6), 40);
        EXPECT_EQ(parse_polynomial(to_string(a)), a) << to_string(a);
    }
}

TEST(Irreducibility, KnownCases) {
    EXPECT_EQ(verify_irreducible_best_effort(P("x^3-19")), IrreducibilityStatus::proven);
    EXPECT_EQ(verify_irreducible_best_effort(P("x^2+9")), IrreducibilityStatus::proven);
    EXPECT_EQ(verify_irreducible_best_effort(P("x-5")), IrreducibilityStatus::proven);
    EXPECT_EQ(verify_irreducible_best_effort(P("x^2-1")), IrreducibilityStatus::unknown);
    EXPECT_EQ(verify_irreducible_best_effort(P("x^4+4")), IrreducibilityStatus::unknown);
    EXPECT_EQ(verify_irreducible_best_effort(P("x^5-x-1")), IrreducibilityStatus::proven);
    EXPECT_THROW(verify_irreducible_best_effort(P("2*x+4")), std::invalid_argument);
}

TEST(Irreducibility, RationalRootSplitting) {
    const auto parts = split_rational_roots(P("x^3-x"));
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(product(parts), P("x^3-x"));
    const auto two = split_rational_roots(P("2*x^2-x-1"));
    EXPECT_EQ(product(two), P("2*x^2-x-1"));
    EXPECT_EQ(two.size(), 2u);
}

// A product of two non-constant polynomials is never proven irreducible.
TEST(IrreducibilityProperty, ProductsAreNeverProven) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = test::random_primitive(rng, 3, 9), b = test::random_primitive(rng, 3, 9);
        EXPECT_EQ(verify_irreducible_best_effort(primitive_part(a * b)), IrreducibilityStatus::unknown)
            << to_string(a * b);
    }
}
