#include "gstruve/errors.hpp"
#include "gstruve/wright.hpp"
#include "testutil.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace gstruve;
using ap::Real;
using gstruve::testing::digits_agree;

constexpr double kPi = std::numbers::pi;

TEST(StruveParams, RejectsAOutsideRange)
{
    EXPECT_THROW(StruveParams(Rational(-1), Rational(0)), Error);
    EXPECT_THROW(StruveParams(Rational(-3, 2), Rational(0)), Error);
    EXPECT_NO_THROW(StruveParams(Rational(-9, 10), Rational(0)));
}

TEST(StruveParams, Kind)
{
    EXPECT_EQ(StruveParams(Rational(1, 2), Rational(0)).kind(), ParamCase::PositiveA);
    EXPECT_EQ(StruveParams(Rational(-1, 2), Rational(0)).kind(), ParamCase::NegativeA);
    EXPECT_EQ(StruveParams(Rational(0), Rational(0)).kind(), ParamCase::ZeroA);
}

TEST(DeriveParams, HalfQuarter)
{
    WrightParams wp = derive_params(StruveParams(Rational(1, 2), Rational(1, 4)), 50);
    EXPECT_EQ(wp.kappa_exact, Rational(3, 2));
    EXPECT_GT(digits_agree(wp.h, "1.4142135623730950488016887242096980785696718753769"), 48);
    EXPECT_GT(digits_agree(wp.theta, "-1.75"), 48);
    EXPECT_GT(digits_agree(wp.theta_prime, "2.75"), 48);
    // 3^(5/4) / sqrt(2 pi)
    EXPECT_GT(digits_agree(wp.A0, "1.5751127037129959681661604857830804852102429007791"), 48);
}

TEST(DeriveParams, AEqualsOne)
{
    WrightParams wp = derive_params(StruveParams(Rational(1), Rational(2, 7)), 40);
    EXPECT_EQ(wp.kappa_exact, Rational(2));
    EXPECT_GT(digits_agree(wp.h, "1"), 38);
    EXPECT_GT(digits_agree(wp.theta, "-1.7857142857142857142857142857142857142857"), 38);
}

TEST(DeriveParams, NegativeHalf)
{
    WrightParams wp = derive_params(StruveParams(Rational(-1, 2), Rational(1, 3)), 50);
    EXPECT_EQ(wp.kind, ParamCase::NegativeA);
    EXPECT_GT(digits_agree(wp.kappa, "0.5"), 48);
    EXPECT_GT(digits_agree(wp.h, "0.70710678118654752440084436210484903928483593768847"), 48);
    EXPECT_GT(digits_agree(wp.A0, "2.5066282746310005024157652848110452530069867406099"), 48);
}

TEST(DeriveParams, ZeroARejected)
{
    EXPECT_THROW(derive_params(StruveParams(Rational(0), Rational(1)), 30), Error);
}

TEST(Classify, AlgebraicOnlyBeyondStokesLine)
{
    EXPECT_EQ(classify(0.5, kPi).sector, Sector::AlgebraicOnly);
    EXPECT_EQ(classify(0.5, kPi / 2).sector, Sector::StokesLine);
}

TEST(Classify, AntiStokesAtOneThird)
{
    Regime r = classify(2.0 / 3.0, kPi / 3);
    EXPECT_EQ(r.sector, Sector::AntiStokesLine);
    EXPECT_EQ(r.dominant, Dominance::Comparable);
}

TEST(Classify, RealAxisExponentiallyLarge)
{
    Regime r = classify(1.5, 0.0);
    EXPECT_EQ(r.sector, Sector::ExponentiallyLarge);
    EXPECT_EQ(r.dominant, Dominance::Exponential);
}

TEST(Classify, BeyondAntiStokes)
{
    EXPECT_EQ(classify(1.5, kPi).sector, Sector::ExponentiallySmallPlusAlgebraic);
    EXPECT_EQ(classify(0.8, 0.6 * kPi).sector, Sector::ExponentiallySmallPlusAlgebraic);
}

TEST(ExponentialCount, SmallestN)
{
    EXPECT_EQ(exponential_count(1.5), 0);
    EXPECT_EQ(exponential_count(2.0), 1);  // 2N+1 > 1 fails at N=0
    EXPECT_EQ(exponential_count(1.99), 0);
    EXPECT_EQ(exponential_count(4.0), 1);
    EXPECT_EQ(exponential_count(6.0), 2);
}
