#include "gstruve/asym.hpp"
#include "gstruve/errors.hpp"
#include "gstruve/series.hpp"
#include "testutil.hpp"

#include <gtest/gtest.h>

using namespace gstruve;
using ap::Complex;
using ap::Real;
using gstruve::testing::digits_agree;

namespace {

const StruveParams kHalfQuarter(Rational(1, 2), Rational(1, 4));

PhasedArg phased(const Rational& modulus, const Rational& phase, int d)
{
    return {Real(modulus, d), Real(phase, d)};
}

const CoeffTable& half_quarter_table()
{
    static const CoeffTable t = solve_coeffs(kHalfQuarter, 12, 60);
    return t;
}

}  // namespace

TEST(ExpExpansion, FixedTruncationAgainstPrintedCoefficients)
{
    WrightParams wp = derive_params(kHalfQuarter, 60);
    Component c = exp_expansion_E(phased(25, 0, 60), wp, half_quarter_table(), TruncationPolicy::fixed(10));
    EXPECT_EQ(c.terms_used, 11);
    EXPECT_GT(digits_agree(c.value, "122603.92858583067804608968448417378921002799034675"), 30);
    EXPECT_GT(c.error_estimate.to_double(), 0);
}

TEST(ExpExpansion, ComplexArgument)
{
    // zeta = (6+5i)^2/4 = (61/4) e^{i atan2(60, 11)}
    WrightParams wp = derive_params(kHalfQuarter, 60);
    PhasedArg z{Real(Rational(61, 4), 60), ap::atan2(Real(60, 60), Real(11, 60))};
    Component c = exp_expansion_E(z, wp, half_quarter_table(), TruncationPolicy::fixed(10));
    EXPECT_GT(digits_agree(c.value, "3.4860391403182555659171960745983990775570439954372",
                           "22.445690338891411974623317291208330761439016449903"),
              30);
}

TEST(ExpExpansion, SingleTermIsPrefactor)
{
    WrightParams wp = derive_params(kHalfQuarter, 50);
    CoeffTable t = half_quarter_table();
    Component c = exp_expansion_E(phased(25, 0, 50), wp, t, TruncationPolicy::fixed(0));
    // A0 Z^theta e^Z with Z = (3/2) (sqrt2 * 25)^(2/3)
    Real Z = Real(Rational(3, 2), 50) * ap::pow(wp.h * Real(25, 50), Real(Rational(2, 3), 50));
    Real expect = wp.A0 * ap::pow(Z, wp.theta) * ap::exp(Z);
    EXPECT_LT(ap::log10_abs(ap::abs(c.value.re - expect) / expect), -45);
    EXPECT_LT(ap::abs(c.value.im).to_double(), 1e-40);
}

TEST(ExpExpansion, ZeroArgument)
{
    WrightParams wp = derive_params(kHalfQuarter, 30);
    EXPECT_THROW(exp_expansion_E(phased(0, 0, 30), wp, half_quarter_table(), TruncationPolicy::fixed(3)), Error);
}

TEST(AlgExpansion, FixedTruncation)
{
    Component c = alg_expansion_H12(phased(25, 0, 50), kHalfQuarter, TruncationPolicy::fixed(12), 50);
    EXPECT_EQ(c.terms_used, 13);
    EXPECT_GT(digits_agree(c.value, "0.025273155074116086032484391115528440443865462723558"), 45);
}

TEST(AlgExpansion, PhaseIsKept)
{
    Component c =
        alg_expansion_H12(phased(25, Rational(7, 10), 50), kHalfQuarter, TruncationPolicy::fixed(9), 50);
    EXPECT_GT(digits_agree(c.value, "0.019102435647339838598635016436328829413419387531171",
                           "-0.016408951107748178599835952971621672351741928396318"),
              45);
}

TEST(AlgExpansion, OptimalStopsBeforeSmallestEnvelope)
{
    // expected indices from an independent scan of the envelopes
    struct Case {
        Rational x;
        int terms;
        const char* value;
    };
    for (const Case& k : {Case{25, 11, "0.025273156096110034483679153240415642023631973654986"},
                          Case{Rational(225, 4), 19, "0.011139153804338134287515900055243194616590791728115"},
                          Case{100, 28, "0.0062476277525209079980418818435671541096283788017532"}}) {
        Component c = alg_expansion_H12(phased(k.x, 0, 50), kHalfQuarter, TruncationPolicy::optimal(), 50);
        EXPECT_EQ(c.terms_used, k.terms) << k.x;
        EXPECT_GT(digits_agree(c.value, k.value), 45) << k.x;
        EXPECT_FALSE(c.truncation_unstable);
    }
}

TEST(AlgExpansion, CapReachedIsUnstable)
{
    Component c = alg_expansion_H12(phased(2, 0, 30), kHalfQuarter, TruncationPolicy::optimal(3), 30);
    EXPECT_EQ(c.terms_used, 3);
    EXPECT_TRUE(c.truncation_unstable);
}

TEST(TildeE, EqualsConjugatePair)
{
    WrightParams wp = derive_params(kHalfQuarter, 60);
    const auto tp = TruncationPolicy::fixed(10);
    Real x(100, 60);
    Real X = wp.kappa * ap::pow(wp.h * x, Real(1, 60) / wp.kappa);
    Component t = tilde_E_n(X, 1, wp, half_quarter_table(), tp);
    Real pi = ap::pi(60);
    Complex pair = exp_expansion_E({x, pi}, wp, half_quarter_table(), tp).value +
                   exp_expansion_E({x, -pi}, wp, half_quarter_table(), tp).value;
    EXPECT_LT(ap::log10_abs(ap::abs(t.value - pair) / ap::abs(pair)), -45);
    EXPECT_LT(ap::abs(pair.im).to_double(), 1e-50);
}

TEST(HatH21, FixedTruncationBothSums)
{
    StruveParams p(Rational(-1, 5), Rational(1, 3));
    Component c = alg_hat_H21(Real(16, 50), p, TruncationPolicy::fixed(6), 50);
    ASSERT_EQ(c.parts.size(), 2u);
    EXPECT_GT(digits_agree(c.parts[0].value, "-0.033846246195437345273234350449722131088474506957675"), 45);
    EXPECT_GT(digits_agree(c.parts[1].value, "7576.989243121210706779944965944717429478522452723"), 45);
    Complex sum = c.parts[0].value + c.parts[1].value;
    EXPECT_LT(ap::abs(sum - c.value).to_double(), 1e-40);
}

TEST(HatH21, DoublePoleRejected)
{
    // k_s = 2k - 2 is a positive integer at k = 2
    try {
        alg_hat_H21(Real(16, 30), StruveParams(Rational(-1, 2), Rational(1, 2)), TruncationPolicy::optimal(), 30);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DoublePole);
    }
}

TEST(AssembleNegImag, LeadingTerm)
{
    StruveParams p(Rational(-1, 3), Rational(4, 3));
    AsymptoticEstimate e = assemble_neg_imag(Real(6, 50), p, TruncationPolicy::fixed(0), 50);
    ASSERT_EQ(e.components.size(), 1u);
    EXPECT_GT(digits_agree(e.value, "0.026731729344186548203405687399700712736373139551165"), 45);
    EXPECT_EQ(e.regime.sector, Sector::AlgebraicOnly);
}

TEST(AssembleNegReal, OneComponentAboveHalf)
{
    StruveParams p(Rational(-3, 5), Rational(1, 3));
    AsymptoticEstimate e = assemble_neg_real(Real(5, 50), p, CoeffTable{}, TruncationPolicy::optimal(),
                                             TruncationPolicy::optimal(), 50);
    EXPECT_EQ(e.components.size(), 1u);
}

TEST(AssemblePos, LargerKappaAddsRotatedExponentials)
{
    StruveParams p(Rational(3), Rational(0));
    // h = 1/27, so X = 4 (x/27)^(1/4) is only about 20 at z = 260
    CoeffTable t = solve_coeffs(p, 40, 50);
    AsymptoticEstimate e =
        assemble_pos(Complex(Real(260, 50)), p, t, TruncationPolicy::optimal(), TruncationPolicy::optimal(), 50);
    EXPECT_EQ(e.regime.n_range, 1);
    EXPECT_EQ(e.components.size(), 3u);
    EvalResult s = eval_series(Complex(Real(260, 50)), p, 50);
    EXPECT_LT(ap::log10_abs(ap::abs(s.value - e.value) / ap::abs(s.value)), -8);
}

TEST(AssemblePos, LeftHalfPlaneUnsupported)
{
    try {
        assemble_pos(Complex(Real(-5, 30), Real(1, 30)), kHalfQuarter, half_quarter_table(),
                     TruncationPolicy::optimal(), TruncationPolicy::optimal(), 30);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SectorUnsupported);
    }
}

TEST(RequireStable, ThrowsOnFlag)
{
    AsymptoticEstimate e;
    Component c;
    c.truncation_unstable = true;
    e.components.push_back(c);
    EXPECT_THROW(require_stable(e), Error);
}
