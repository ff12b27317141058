#include <gtest/gtest.h>

#include "postdom/errors.hpp"
#include "postdom/rational.hpp"

using postdom::BigInt;
using postdom::Rational;

TEST(Rational, MakeCanonicalizes) {
    EXPECT_EQ(Rational(BigInt(10), BigInt(13)).str(), "10/13");
    EXPECT_EQ(Rational(BigInt(0), BigInt(5)).str(), "0/1");
    EXPECT_EQ(Rational(BigInt(-4), BigInt(-6)).str(), "2/3");
    EXPECT_EQ(Rational(BigInt(4), BigInt(-6)).str(), "-2/3");
    EXPECT_EQ(Rational(3).str(), "3/1");
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), postdom::ArithmeticError);
    EXPECT_THROW(Rational(1) / Rational(0), postdom::ArithmeticError);
    EXPECT_THROW(Rational(0).reciprocal(), postdom::ArithmeticError);
}

TEST(Rational, CompareIsExact) {
    EXPECT_GT(Rational::parse("10/13"), Rational::parse("6/11"));
    EXPECT_EQ(Rational::parse("1/2"), Rational::parse("2/4"));
    EXPECT_GT(Rational::parse("5/8"), Rational::parse("13/24"));
    EXPECT_EQ(postdom::compare(Rational::parse("1/2"), Rational::parse("1/2")), std::strong_ordering::equal);
    // Doubles would call these equal.
    const Rational big(BigInt("9007199254740993"), BigInt("9007199254740992"));
    EXPECT_GT(big, Rational(1));
}

TEST(Rational, Arithmetic) {
    const auto a = Rational::parse("5/8");
    const auto b = Rational::parse("3/8");
    EXPECT_EQ((a + b).str(), "1/1");
    EXPECT_EQ((a - b).str(), "1/4");
    EXPECT_EQ((a * b).str(), "15/64");
    EXPECT_EQ((a / b).str(), "5/3");
    EXPECT_EQ((-a).str(), "-5/8");
    EXPECT_EQ((-a).abs(), a);
    EXPECT_EQ(Rational::parse("98/143") - Rational::parse("2/3"), Rational::parse("8/429"));
}

TEST(Rational, ParseRoundTrip) {
    for (const char* text : {"0/1", "-7/3", "10/13", "123456789012345678901234567891/2"}) {
        EXPECT_EQ(Rational::parse(text).str(), text);
    }
    EXPECT_EQ(Rational::parse("4").str(), "4/1");
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
}

TEST(Rational, ParseRejectsGarbage) {
    for (const char* text : {"", "1/", "/2", "1.5", "a/b", "1/0", "1//2", " 1/2", "--1/2"}) {
        EXPECT_THROW(Rational::parse(text), postdom::Error) << text;
    }
}

TEST(Rational, VectorHelpers) {
    const postdom::RationalVector v{Rational::parse("1/2"), Rational::parse("1/3"), Rational::parse("1/6")};
    EXPECT_EQ(postdom::sum(v), Rational(1));
    EXPECT_EQ(postdom::dot(v, v), Rational::parse("7/18"));
    EXPECT_THROW(postdom::dot(v, postdom::RationalVector{Rational(1)}), postdom::PreconditionError);
    const auto strings = postdom::to_strings(v);
    EXPECT_EQ(postdom::parse_all(strings), v);
}
