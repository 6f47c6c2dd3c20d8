#include <gtest/gtest.h>

#include "printers.hpp"

#include "bethe/big_float.hpp"
#include "bethe/errors.hpp"
#include "bethe/polynomial.hpp"
#include "bethe/rational.hpp"

namespace bethe {
namespace {

TEST(BigFloat, PrecisionRange) {
    EXPECT_THROW(require_supported_precision(Precision{63}), ConfigError);
    EXPECT_THROW(require_supported_precision(Precision{4097}), ConfigError);
    EXPECT_NO_THROW(require_supported_precision(Precision{64}));
    EXPECT_NO_THROW(require_supported_precision(Precision{4096}));
}

TEST(BigFloat, ParseAndRender) {
    const BigFloat x = BigFloat::parse("0.25", kDefaultPrecision);
    EXPECT_EQ(x, BigFloat(1L, kDefaultPrecision) / 4L);
    EXPECT_EQ(BigFloat::parse("1e-3", kDefaultPrecision).to_string(6), "1.00000e-03");
    EXPECT_THROW(BigFloat::parse("", kDefaultPrecision), ConfigError);
    EXPECT_THROW(BigFloat::parse("0.2x", kDefaultPrecision), ConfigError);
    EXPECT_THROW(BigFloat::parse("nan", kDefaultPrecision), ConfigError);
}

TEST(BigFloat, ElementaryFunctions) {
    const Precision p{256};
    const BigFloat two(2L, p);
    EXPECT_LT(abs(sqrt(two) * sqrt(two) - 2L), exp2i(-250, p));
    EXPECT_LT(abs(pow(root(two, 5), 5UL) - 2L), exp2i(-250, p));
    EXPECT_LT(abs(atanh(tanh(two)) - 2L), exp2i(-248, p));
    EXPECT_EQ(exp2i(-3, p), BigFloat(1L, p) / 8L);
    EXPECT_EQ(relative_error(BigFloat(3L, p), BigFloat(3L, p)), 0L);
}

TEST(Rational, CanonicalRendering) {
    EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(Rational(3)), "3/1");
    EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_THROW(parse_rational("1/0"), ConfigError);
    EXPECT_THROW(parse_rational("a/b"), ConfigError);
    EXPECT_EQ(pow(Rational(2, 3), 3UL), Rational(8, 27));
    EXPECT_EQ(pow(Rational(2, 3), -2L), Rational(9, 4));
    EXPECT_TRUE(is_rational_square(Rational(9, 49)));
    EXPECT_FALSE(is_rational_square(Rational(29, 49)));
}

TEST(IntPolynomial, ArithmeticAndRendering) {
    const IntPolynomial p{30, 18};
    EXPECT_EQ(p.to_string(), "18*z + 30");
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(IntPolynomial{}.degree(), -1);
    EXPECT_EQ((IntPolynomial{1, 1} * IntPolynomial{-1, 1}), (IntPolynomial{-1, 0, 1}));
    EXPECT_EQ(pow(IntPolynomial{1, -1}, 3), (IntPolynomial{1, -3, 3, -1}));
    EXPECT_EQ((IntPolynomial{1, 2} - IntPolynomial{1, 2}).degree(), -1);
    EXPECT_EQ(p.evaluate(Integer(2)), Integer(66));
    EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(39));
}

TEST(IntPolynomial, SyntheticDivision) {
    // z^3 - 1 = (z - 1)(z^2 + z + 1)
    const LinearDivision q = divide_by_linear(IntPolynomial{-1, 0, 0, 1}, Integer(1));
    EXPECT_EQ(q.quotient, (IntPolynomial{1, 1, 1}));
    EXPECT_EQ(q.remainder, 0);
    const LinearDivision r = divide_by_linear(IntPolynomial{5, 0, 1}, Integer(2));
    EXPECT_EQ(r.quotient, (IntPolynomial{2, 1}));
    EXPECT_EQ(r.remainder, 9);
}

}  // namespace
}  // namespace bethe
