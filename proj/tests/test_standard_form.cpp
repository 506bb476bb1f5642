#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ivp;
using ivp::test::P;

namespace {

// fd by brute force over a full residue system mod m: gcd of N(w), 0 <= w < m.
Integer fd_over_range(const IntPoly& g, long long count) {
    Integer d = 0;
    for (long long w = 0; w < count; ++w) d = gcd(d, g(Integer(w)));
    return d;
}

// Membership by checking b | a*N(w) over one full period 0..b-1.
bool member_by_periodicity(const StandardForm& sf) {
    const Integer b = sf.denominator();
    const IntPoly n = sf.numerator();
    for (Integer w = 0; w < b; ++w)
        if (mod(n(w), b) != 0) return false;
    return true;
}

} // namespace

TEST(StandardForm, RunningExample) {
    const StandardForm sf = test::example_form();
    EXPECT_EQ(fixed_divisor(sf.numerator_product()), 15);
    EXPECT_EQ(fd_over_range(sf.numerator_product(), 200), 15);
    const auto m = is_member(sf);
    EXPECT_TRUE(m.is_member);
    EXPECT_TRUE(m.is_image_primitive);
    EXPECT_EQ(m.fd_of_f, 1);
    EXPECT_EQ(to_expression(sf), "(x^3-19)*(x^2+9)*(x^2+1)*(x-5)/15");
}

TEST(StandardForm, NormalizationPullsContentAndSign) {
    const StandardForm sf = normalize(6, {IntPoly{-2, -4}, P("x^2+1")}, 20);
    EXPECT_EQ(sf.constant, -3);
    EXPECT_EQ(sf.denominator(), 5);
    ASSERT_EQ(sf.factors.size(), 2u);
    EXPECT_EQ(sf.factors[0], P("2*x+1"));
    const StandardForm folded = normalize(1, {IntPoly{4}, P("x")}, 2);
    EXPECT_EQ(folded.constant, 2);
    EXPECT_TRUE(folded.denom.empty());
}

TEST(StandardForm, RejectsDegenerateInput) {
    EXPECT_THROW(normalize(1, {P("x")}, 0), InputError);
    EXPECT_THROW(normalize(0, {P("x")}, 1), InputError);
    EXPECT_THROW(normalize(1, {IntPoly{}}, 1), InputError);
    EXPECT_THROW(normalize(1, {IntPoly{3}}, 1), InputError);
}

TEST(StandardForm, NonMemberAndNonImagePrimitive) {
    const auto m = is_member(normalize(1, {P("x^2+1")}, 2));
    EXPECT_FALSE(m.is_member);
    const auto m2 = is_member(normalize(1, {P("x"), P("x-1"), P("x-2")}, 2));
    EXPECT_TRUE(m2.is_member);
    EXPECT_FALSE(m2.is_image_primitive);
    EXPECT_EQ(m2.fd_of_f, 3);
}

TEST(StandardForm, ExpressionGroupsRepeatedFactors) {
    const StandardForm sf = normalize(-1, {P("x"), P("x"), P("x^2+3")}, 4);
    EXPECT_EQ(to_expression(sf), "-(x)^2*(x^2+3)/4");
}

TEST(FixedDivisorProperty, AgreesWithWideValueGcd) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly g = test::random_primitive(rng, 4, 20);
        if (rng() % 2) g = g * P("x") * P("x-1");
        EXPECT_EQ(fixed_divisor(g), fd_over_range(g, 40)) << to_string(g);
    }
}

TEST(FixedDivisorProperty, Multiplicative) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly f = test::random_primitive(rng, 4, 50), g = test::random_primitive(rng, 4, 50);
        const Integer prod = fixed_divisor(f * g);
        EXPECT_EQ(mod(prod, fixed_divisor(f) * fixed_divisor(g)), 0) << to_string(f) << " " << to_string(g);
    }
}

TEST(MembershipProperty, AgreesWithPeriodicCheck) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<IntPoly> factors;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) factors.push_back(test::random_primitive(rng, 3, 6));
        const Integer b = 1 + static_cast<long long>(rng() % 36);
        const StandardForm sf = normalize(1, factors, b);
        EXPECT_EQ(is_member(sf).is_member, member_by_periodicity(sf)) << to_expression(sf);
    }
}

TEST(MembershipProperty, ImagePrimitivePowers) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const StandardForm sf = test::random_image_primitive(rng, 3, 3, 9);
        const IntPoly g = sf.numerator_product();
        for (unsigned n : {2u, 3u}) {
            const Integer fdn = fixed_divisor(pow(g, n));
            for (const auto& [p, e] : sf.denom)
                EXPECT_EQ(padic_valuation(fdn, p), Valuation(n * e)) << to_expression(sf);
        }
    }
}
