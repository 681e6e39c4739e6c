#include "gstruve/ap.hpp"
#include "gstruve/errors.hpp"
#include "testutil.hpp"

#include <gtest/gtest.h>

using namespace gstruve;
using ap::Complex;
using ap::Real;
using gstruve::testing::digits_agree;

TEST(ParseRational, Fractions)
{
    EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
    EXPECT_EQ(parse_rational("-5/12"), Rational(-5, 12));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
}

TEST(ParseRational, Decimals)
{
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-0.2"), Rational(-1, 5));
    EXPECT_EQ(parse_rational("1.5e2"), Rational(150));
    EXPECT_EQ(parse_rational("25e-2"), Rational(1, 4));
    EXPECT_EQ(parse_rational("3"), Rational(3));
}

TEST(ParseRational, RejectsGarbage)
{
    EXPECT_THROW(parse_rational(""), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
    EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(RationalPredicates, Integers)
{
    EXPECT_TRUE(is_integer(Rational(4)));
    EXPECT_FALSE(is_integer(Rational(1, 2)));
    EXPECT_TRUE(is_nonpositive_integer(Rational(0)));
    EXPECT_TRUE(is_nonpositive_integer(Rational(-3)));
    EXPECT_FALSE(is_nonpositive_integer(Rational(2)));
    EXPECT_FALSE(is_nonpositive_integer(Rational(-1, 2)));
}

TEST(Real, PrecisionFollowsDigits)
{
    Real x(1, 50);
    EXPECT_GE(x.digits(), 50);
    Real y = x.at_digits(100);
    EXPECT_GE(y.digits(), 100);
    EXPECT_GE((x + y).digits(), 100);
}

TEST(Real, ToStringFormat)
{
    EXPECT_EQ(Real(Rational(-1234, 10), 30).to_string(4), "-1.234e+02");
    EXPECT_EQ(Real(Rational(1, 4), 30).to_string(3), "2.50e-01");
}

TEST(Real, GammaAtHalfIntegers)
{
    // Gamma(-5/2) = -8 sqrt(pi) / 15
    EXPECT_GT(digits_agree(ap::tgamma(Real(Rational(-5, 2), 50)),
                           "-0.94530872048294188122568932444861076415869304326527"),
              48);
}

TEST(Complex, GammaModerate)
{
    Complex z(Real(Rational(7, 2), 50), Real(3, 50));
    EXPECT_GT(digits_agree(ap::tgamma(z), "-0.76140171792433234438640167222455827412651019429159",
                           "-0.47427000472543110851810164574535201548588514411103"),
              47);
}

TEST(Complex, GammaLeftHalfPlaneLargeImaginary)
{
    Complex z(Real(Rational(-37, 2), 50), Real(-51, 50));
    EXPECT_GT(digits_agree(ap::tgamma(z), "-9.5555740683202940146163180642962038962553270187778e-68",
                           "-2.0847529309197746624710036722635090590471549310621e-69"),
              45);
}

TEST(Complex, LogGammaExponentiatesToGamma)
{
    Complex z(Real(Rational(123, 10), 60), Real(Rational(-77, 10), 60));
    Complex g = ap::tgamma(z);
    Complex lg = ap::exp(ap::lgamma(z));
    EXPECT_LT(ap::log10_abs(ap::abs(g - lg) / ap::abs(g)), -55);
}

TEST(Complex, RecurrenceGammaZPlusOne)
{
    Complex z(Real(Rational(-3, 7), 50), Real(Rational(5, 3), 50));
    Complex lhs = ap::tgamma(z + Complex(Real(1, 50)));
    Complex rhs = z * ap::tgamma(z);
    EXPECT_LT(ap::log10_abs(ap::abs(lhs - rhs) / ap::abs(lhs)), -47);
}

TEST(Complex, PowPrincipalBranch)
{
    Complex m1(Real(-1, 40));
    Complex r = ap::pow(m1, Real(Rational(1, 2), 40));
    EXPECT_LT(ap::abs(r.re).to_double(), 1e-38);
    EXPECT_NEAR(r.im.to_double(), 1.0, 1e-38);
}
