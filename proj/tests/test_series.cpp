#include "gstruve/errors.hpp"
#include "gstruve/series.hpp"
#include "testutil.hpp"

#include <gtest/gtest.h>

using namespace gstruve;
using ap::Complex;
using ap::Real;
using gstruve::testing::digits_agree;

namespace {

Complex real_z(long v, int d) { return Complex(Real(v, d)); }
Complex imag_z(long v, int d) { return Complex(Real(d), Real(v, d)); }

const StruveParams kHalfQuarter(Rational(1, 2), Rational(1, 4));

}  // namespace

TEST(GammaAp, Classical)
{
    EXPECT_GT(digits_agree(gamma_ap(Real(Rational(1, 2), 40)), "1.7724538509055160272981674833411451827975494561224"),
              38);
    EXPECT_GT(digits_agree(gamma_ap(Real(5, 40)), "24"), 38);
    EXPECT_GT(digits_agree(gamma_ap(Real(Rational(3, 2), 50)) * gamma_ap(Real(Rational(7, 4), 50)),
                           "0.81449795746812865209153458104079519166047868894304"),
              47);
}

TEST(GammaAp, PoleThrows)
{
    try {
        gamma_ap(Real(-3, 30));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PoleOfGamma);
    }
}

TEST(RgammaExact, ZeroAtPoles)
{
    EXPECT_TRUE(rgamma_exact(Rational(0), 30).is_zero());
    EXPECT_TRUE(rgamma_exact(Rational(-4), 30).is_zero());
    EXPECT_GT(digits_agree(rgamma_exact(Rational(5), 30), "0.041666666666666666666666666666666666667"), 28);
}

TEST(RgammaEnvelope, MatchesReflection)
{
    // Gamma(7/2)/pi for x = -5/2
    EXPECT_GT(digits_agree(rgamma_envelope(Rational(-5, 2), 40), "1.0578554691520430380276489716764485984575949299919"),
              38);
    EXPECT_GT(digits_agree(rgamma_envelope(Rational(3), 40), "0.5"), 38);
}

TEST(EvalSeries, ZeroArgumentIsLeadingTerm)
{
    EvalResult r = eval_series(real_z(0, 50), kHalfQuarter, 50);
    EXPECT_GT(digits_agree(r.value, "1.2277501629451661977776052311576890183071808722419"), 48);
    EXPECT_TRUE(r.unnormalized.is_zero());
}

TEST(EvalSeries, RealArgument)
{
    EvalResult r = eval_series(real_z(10, 50), kHalfQuarter, 50);
    EXPECT_GT(digits_agree(r.value, "122603.90402761449499105473677324956818399924661548"), 45);
    r = eval_series(real_z(15, 50), kHalfQuarter, 50);
    EXPECT_GT(digits_agree(r.value, "5182624937.4957119414844282339729466105139530260471"), 45);
}

TEST(EvalSeries, NegativeA)
{
    StruveParams p(Rational(-1, 5), Rational(1, 3));
    EXPECT_GT(digits_agree(eval_series(real_z(7, 50), p, 50).value,
                           "2167.5859093371675673353212863730942887885462235438"),
              45);
    EXPECT_GT(digits_agree(eval_series(real_z(8, 50), p, 50).value,
                           "13712.782145881689680789467178528252234768084970235"),
              45);
}

TEST(EvalSeries, ComplexArgument)
{
    Complex z(Real(3, 50), Real(4, 50));
    EXPECT_GT(digits_agree(eval_series(z, StruveParams(Rational(2), Rational(0)), 50).value,
                           "0.6963113508861283758317613960836712550449174967663",
                           "1.2302310200839858814300607818560200467566434836774"),
              45);
    Complex w(Real(Rational(5, 2), 50), Real(-1, 50));
    EXPECT_GT(digits_agree(eval_series(w, StruveParams(Rational(3, 2), Rational(-1, 3)), 50).value,
                           "1.8739188188687409981520528469043628059171889442846",
                           "-0.76358809271383642165294413771050973372412076274456"),
              45);
}

TEST(EvalSeries, ImaginaryAxisNeedsEscalation)
{
    // about 17 digits cancel at z = 20i, so 40 correct digits need more than 50
    EvalResult r = eval_series_escalating(imag_z(20, 50), kHalfQuarter, 50, {400, 40});
    EXPECT_GT(r.precision_used, 50);
    EXPECT_GT(r.cancellation_digits, 10);
    EXPECT_GT(digits_agree(r.value, "0.0062476277593485743230280238571927959045839256726456"), 40);
}

TEST(EvalSeries, PrecisionExhaustedWithoutEscalation)
{
    try {
        eval_series(imag_z(120, 20), kHalfQuarter, 20);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PrecisionExhausted);
    }
}

TEST(EvalAlternating, AgreesWithComplexSeries)
{
    StruveParams p(Rational(-1, 4), Rational(4, 3));
    EvalResult alt = eval_alternating(Real(8, 50), p, 50);
    EXPECT_GT(digits_agree(alt.value, "0.016732755650467673900073985795899682432403918165527"), 40);
    for (long x : {1L, 3L, 7L, 10L}) {
        Complex a = eval_alternating(Real(x, 50), kHalfQuarter, 50).value;
        Complex b = eval_series(imag_z(x, 50), kHalfQuarter, 50).value;
        EXPECT_LT(ap::log10_abs(ap::abs(a - b) / ap::abs(b)), -40) << "x=" << x;
    }
}

TEST(EvalSeries, AEqualsOneReduction)
{
    // unnormalized L_{1/2}(z;1) = sqrt(2/(pi z)) (cosh z - 1)
    EvalResult r = eval_series(real_z(5, 50), StruveParams(Rational(1), Rational(1, 2)), 50);
    EXPECT_GT(digits_agree(r.unnormalized, "26.123126941075396497571703485307651252121821017054"), 45);
}

TEST(EvalSeries, ZeroA)
{
    // a = 0 has no asymptotic representation but the series is fine:
    // sum (z^2/4)^n / Gamma(n+3/2) / Gamma(nu+3/2)
    StruveParams p(Rational(0), Rational(1, 2));
    EvalResult r = eval_series(real_z(0, 40), p, 40);
    EXPECT_GT(digits_agree(r.value, "1.1283791670955125738961589031215451716881012586580"), 38);
}
