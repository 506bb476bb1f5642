#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ivp;
using ivp::test::P;

TEST(Parser, RunningExample) {
    const auto e = parse_expression("(x^3-19)*(x^2+9)*(x^2+1)*(x-5)/15");
    ASSERT_EQ(e.factors.size(), 4u);
    EXPECT_EQ(e.factors[0].poly, (IntPoly{-19, 0, 0, 1}));
    EXPECT_EQ(e.denominator, Integer(15));
    EXPECT_FALSE(e.constant.has_value());
}

TEST(Parser, ExponentsExpand) {
    const auto e = parse_expression("(x)^2*(x^2+3)/4");
    const auto f = e.expanded_factors();
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], P("x"));
    EXPECT_EQ(f[1], P("x"));
    EXPECT_EQ(f[2], P("x^2+3"));
    EXPECT_EQ(e.denominator, Integer(4));
}

TEST(Parser, ConstantsAndSigns) {
    const auto e = parse_expression(" -3 * ( 2x^2 - x + 7 ) ");
    EXPECT_EQ(e.constant, Integer(-3));
    EXPECT_EQ(e.factors[0].poly, (IntPoly{7, -1, 2}));
    EXPECT_EQ(parse_expression("-(x)*(x-1)/2").constant, Integer(-1));
    const auto c = parse_expression("12/4");
    EXPECT_TRUE(c.is_constant());
    EXPECT_EQ(c.constant, Integer(12));
    EXPECT_EQ(P("3*x^2 + 3x^2 - x"), (IntPoly{0, -1, 6}));
    EXPECT_EQ(P("123456789012345678901234567890"), IntPoly::constant(Integer("123456789012345678901234567890")));
}

TEST(Parser, Errors) {
    auto message = [](const char* text) {
        try {
            parse_expression(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message("(x"), "syntax error at 1:3: expected ')' at end of input");
    EXPECT_NE(message("(y+1)").find("unknown variable 'y'"), std::string::npos);
    EXPECT_NE(message("(x+1)/0").find("zero denominator"), std::string::npos);
    EXPECT_NE(message("(x+1)^0").find("exponent must be between 1 and 1000"), std::string::npos);
    EXPECT_NE(message("(x+1)*").find("expected '('"), std::string::npos);
    EXPECT_NE(message("(x+)").find("expected a term"), std::string::npos);
    EXPECT_NE(message("(x)\n*(x+1)z").find("2:7"), std::string::npos);
    EXPECT_THROW(parse_expression(""), ParseError);
    EXPECT_THROW(parse_expression("(x)/-2"), ParseError);
}

// parse -> normalize -> print -> parse is a fixed point from the second pass.
TEST(ParserProperty, RoundTripFixedPoint) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            if (i) text += "*";
            text += "(" + to_string(test::random_primitive(rng, 3, 12)) + ")";
            if (rng() % 4 == 0) text += "^2";
        }
        if (rng() % 2) text += "/" + std::to_string(1 + rng() % 30);
        const StandardForm once = normalize(1, parse_expression(text).expanded_factors(),
                                            parse_expression(text).denominator.value_or(1));
        const std::string printed = to_expression(once);
        const auto again = parse_expression(printed);
        const StandardForm twice =
            normalize(again.constant.value_or(1), again.expanded_factors(), again.denominator.value_or(1));
        EXPECT_EQ(once, twice) << text << " -> " << printed;
        EXPECT_EQ(to_expression(twice), printed);
    }
}
