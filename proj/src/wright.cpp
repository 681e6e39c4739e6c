#include "gstruve/wright.hpp"

#include "gstruve/errors.hpp"

#include <cmath>
#include <numbers>

namespace gstruve {

StruveParams::StruveParams(Rational a_, Rational nu_) : a(std::move(a_)), nu(std::move(nu_))
{
    if (a <= -1)
        throw Error(ErrorKind::DegenerateParameter, "a must exceed -1, got " + a.str());
}

StruveParams StruveParams::parse(std::string_view a, std::string_view nu)
{
    return StruveParams(parse_rational(a), parse_rational(nu));
}

ParamCase StruveParams::kind() const
{
    if (a > 0)
        return ParamCase::PositiveA;
    if (a < 0)
        return ParamCase::NegativeA;
    return ParamCase::ZeroA;
}

std::string StruveParams::describe() const
{
    return "a=" + a.str() + " nu=" + nu.str();
}

WrightParams derive_params(const StruveParams& p, int digits)
{
    const ParamCase k = p.kind();
    if (k == ParamCase::ZeroA)
        throw Error(ErrorKind::DegenerateParameter, "a = 0 has no Wright-function representation here");

    using ap::Real;
    const int d = digits;
    Real one(1L, d);
    Real a(p.a, d);
    Real nu(p.nu, d);
    Real kappa = one + a;
    Real theta = -nu - Real(Rational(3, 2), d);
    Real theta_prime = one - theta;
    Real two_pi = ap::pi(d) * 2L;
    Real h(d), A0(d);
    if (k == ParamCase::PositiveA) {
        h = ap::pow(a, -a);
        A0 = ap::pow(kappa / a, nu + one) / ap::sqrt(two_pi);
    } else {
        Real sigma = -a;
        h = ap::pow(sigma, sigma);
        A0 = ap::sqrt(two_pi) * ap::pow(kappa / sigma, nu + one);
    }
    return WrightParams{k, d, kappa, h, theta, theta_prime, A0, Rational(1) + p.a};
}

const char* to_string(Sector s)
{
    switch (s) {
    case Sector::ExponentiallyLarge: return "ExponentiallyLarge";
    case Sector::AntiStokesLine: return "AntiStokesLine";
    case Sector::ExponentiallySmallPlusAlgebraic: return "ExponentiallySmallPlusAlgebraic";
    case Sector::StokesLine: return "StokesLine";
    case Sector::AlgebraicOnly: return "AlgebraicOnly";
    }
    return "?";
}

const char* to_string(Dominance d)
{
    switch (d) {
    case Dominance::Exponential: return "Exponential";
    case Dominance::Algebraic: return "Algebraic";
    case Dominance::Comparable: return "Comparable";
    }
    return "?";
}

int exponential_count(double kappa)
{
    int n = 0;
    while (2 * n + 1 <= kappa / 2)
        ++n;
    return n;
}

Regime classify(double kappa, double arg_zeta, double tol)
{
    constexpr double pi = std::numbers::pi;
    const double phi = std::fabs(arg_zeta);
    const double half = pi * kappa / 2;
    Sector s;
    if (std::fabs(phi - half) <= tol)
        s = Sector::AntiStokesLine;
    else if (phi < half)
        s = Sector::ExponentiallyLarge;
    else if (kappa < 1 && std::fabs(phi - pi * kappa) <= tol)
        s = Sector::StokesLine;
    else if (kappa < 1 && phi > pi * kappa)
        s = Sector::AlgebraicOnly;
    else
        s = Sector::ExponentiallySmallPlusAlgebraic;

    Dominance d = Dominance::Algebraic;
    if (s == Sector::ExponentiallyLarge)
        d = Dominance::Exponential;
    else if (s == Sector::AntiStokesLine)
        d = Dominance::Comparable;
    return Regime{s, d, exponential_count(kappa)};
}

Regime classify(const WrightParams& wp, double arg_zeta, double tol)
{
    return classify(wp.kappa.to_double(), arg_zeta, tol);
}

}  // namespace gstruve
