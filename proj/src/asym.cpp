#include "gstruve/asym.hpp"

#include "gstruve/errors.hpp"
#include "gstruve/series.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace gstruve {

using ap::Complex;
using ap::Real;

const char* to_string(Role r)
{
    switch (r) {
    case Role::Dominant: return "dominant";
    case Role::Subdominant: return "subdominant";
    case Role::Comparable: return "comparable";
    }
    return "?";
}

namespace {

struct Term {
    Complex value;
    Real envelope;  // term magnitude with any oscillating factor removed
};

struct Truncated {
    Complex sum;
    int terms_used = 0;
    Real first_omitted;
    bool unstable = false;
};

Truncated truncate(const std::function<Term(int)>& term, int available, const TruncationPolicy& tp, int digits)
{
    Truncated out;
    out.sum = Complex(digits);
    out.first_omitted = Real(digits);
    if (available <= 0)
        throw Error(ErrorKind::InvalidInput, "no terms available");

    if (tp.mode == TruncationPolicy::Mode::Fixed) {
        const int n = std::min(tp.j_max + 1, available);
        for (int k = 0; k < n; ++k)
            out.sum += term(k).value;
        out.terms_used = n;
        if (n < available)
            out.first_omitted = term(n).envelope;
        out.unstable = n < tp.j_max + 1;
        return out;
    }

    const int limit = std::min(tp.cap, available);
    const Real eps = ap::pow10(-digits, digits);
    std::vector<Term> terms;
    int best = -1, rises = 0;
    bool have_prev = false;
    Real prev_env(digits);
    Complex partial(digits);
    enum { Running, Minimum, Converged } state = Running;
    for (int k = 0; k < limit && state == Running; ++k) {
        terms.push_back(term(k));
        const Term& t = terms.back();
        partial += t.value;
        if (t.envelope.is_zero())
            continue;  // an absent term carries no information about the envelope
        if (best < 0 || t.envelope < terms[best].envelope)
            best = k;
        if (have_prev)
            rises = t.envelope > prev_env ? rises + 1 : 0;
        prev_env = t.envelope;
        have_prev = true;
        if (rises >= 2)
            state = Minimum;
        else if (k > 0 && t.envelope <= eps * ap::abs(partial))
            state = Converged;
    }

    int n = static_cast<int>(terms.size());
    if (state == Minimum)
        n = std::max(best, 1);
    for (int k = 0; k < n; ++k)
        out.sum += terms[k].value;
    out.terms_used = n;
    out.first_omitted = n < static_cast<int>(terms.size()) ? terms[n].envelope : terms.back().envelope;
    if (state == Running) {
        // ran out of terms while the envelope was still falling
        out.unstable = out.first_omitted > ap::pow10(-digits / 2, digits) * ap::abs(out.sum);
    }
    return out;
}

Component make_component(std::string label, const Complex& pref, const Truncated& t)
{
    Component c;
    c.label = std::move(label);
    c.value = pref * t.sum;
    c.terms_used = t.terms_used;
    c.error_estimate = ap::abs(pref) * t.first_omitted;
    c.truncation_unstable = t.unstable;
    return c;
}

PartialSum make_part(std::string label, const Complex& pref, const Truncated& t)
{
    PartialSum s;
    s.label = std::move(label);
    s.value = pref * t.sum;
    s.terms_used = t.terms_used;
    s.error_estimate = ap::abs(pref) * t.first_omitted;
    s.truncation_unstable = t.unstable;
    return s;
}

void require_coeffs(const CoeffTable& ct, const WrightParams& wp)
{
    if (ct.c.empty())
        throw Error(ErrorKind::InvalidInput, "empty coefficient table");
    if (Rational(1) + ct.a != wp.kappa_exact)
        throw Error(ErrorKind::InvalidInput, "coefficient table belongs to other parameters");
}

void assign_roles(std::vector<Component>& cs)
{
    if (cs.empty())
        return;
    double top = -1e300;
    for (auto& c : cs)
        top = std::max(top, ap::log10_abs(ap::abs(c.value)));
    int near_top = 0;
    for (auto& c : cs)
        if (ap::log10_abs(ap::abs(c.value)) >= top - 1)
            ++near_top;
    for (auto& c : cs) {
        double m = ap::log10_abs(ap::abs(c.value));
        if (m >= top - 1)
            c.role = near_top > 1 ? Role::Comparable : Role::Dominant;
        else
            c.role = Role::Subdominant;
    }
}

void finish(AsymptoticEstimate& e, int digits)
{
    assign_roles(e.components);
    e.value = Complex(digits);
    e.error_estimate = Real(digits);
    for (const auto& c : e.components) {
        e.value += c.value;
        e.error_estimate += c.error_estimate;
        if (c.truncation_unstable)
            e.warnings.push_back("truncation unstable in " + c.label);
    }
}

std::string phase_label(const char* base, long n)
{
    if (n == 0)
        return base;
    return std::string(base) + "[n=" + std::to_string(n) + "]";
}

// first n >= 0 with (n - nu - 1/2)/sigma a positive integer, or -1
long double_pole_index(const StruveParams& p, int count)
{
    const Rational sigma = -p.a;
    for (long k = 0; k < count; ++k) {
        Rational ks = (Rational(k) - p.nu - Rational(1, 2)) / sigma;
        if (is_integer(ks) && ks > 0)
            return k;
    }
    return -1;
}

}  // namespace

Component exp_expansion_E(const PhasedArg& zeta, const WrightParams& wp, const CoeffTable& ct,
                          const TruncationPolicy& tp)
{
    require_coeffs(ct, wp);
    if (zeta.modulus.is_zero())
        throw Error(ErrorKind::ZeroArgument, "zeta = 0");
    const int d = wp.digits;
    Real absZ = wp.kappa * ap::pow(wp.h * zeta.modulus.at_digits(d), Real(1L, d) / wp.kappa);
    Real argZ = zeta.phase.at_digits(d) / wp.kappa;
    Complex Z = Complex::polar(absZ, argZ);
    Complex pref = Complex::polar(wp.A0 * ap::pow(absZ, wp.theta), wp.theta * argZ) * ap::exp(Z);

    Complex Zinv = Complex(Real(1L, d)) / Z;
    Real absZinv = Real(1L, d) / absZ;
    Complex zp(Real(1L, d));
    Real ap_(1L, d);
    int next = 0;
    // terms are requested in order; keep running powers
    auto term = [&](int j) -> Term {
        while (next < j) {
            zp *= Zinv;
            ap_ *= absZinv;
            ++next;
        }
        const Real& c = ct.c[j];
        return {zp * c.at_digits(d), ap::abs(c.at_digits(d)) * ap_};
    };
    Truncated t = truncate(term, static_cast<int>(ct.c.size()), tp, d);
    return make_component("E", pref, t);
}

Component alg_expansion_H12(const PhasedArg& zeta, const StruveParams& p, const TruncationPolicy& tp, int digits)
{
    if (p.kind() != ParamCase::PositiveA)
        throw Error(ErrorKind::InvalidInput, "H12 needs a > 0");
    if (zeta.modulus.is_zero())
        throw Error(ErrorKind::ZeroArgument, "zeta = 0");
    const int d = digits;
    const Real pi = ap::pi(d);
    Real rinv = Real(1L, d) / zeta.modulus.at_digits(d);
    Real phase = zeta.phase.at_digits(d);
    Real g = ap::sqrt(pi);  // Gamma(k + 1/2)
    Real rk = rinv;         // r^{-k-1}
    int next = 0;
    const Rational base = p.nu + Rational(3, 2);
    auto term = [&](int k) -> Term {
        while (next < k) {
            g *= Real(Rational(2 * next + 1, 2), d);
            rk *= rinv;
            ++next;
        }
        Rational arg = base - p.a * (k + 1);
        Real mag = g * rk;
        Complex v = Complex::polar(mag * rgamma_exact(arg, d), -phase * static_cast<long>(k + 1));
        return {v, mag * rgamma_envelope(arg, d)};
    };
    Truncated t = truncate(term, tp.cap, tp, d);
    return make_component("H12", Complex(Real(1L, d) / pi), t);
}

Component tilde_E_n(const Real& X, int n, const WrightParams& wp, const CoeffTable& ct, const TruncationPolicy& tp)
{
    require_coeffs(ct, wp);
    if (X.sign() <= 0)
        throw Error(ErrorKind::ZeroArgument, "X must be positive");
    const int d = wp.digits;
    const Real pi = ap::pi(d);
    Real x = X.at_digits(d);
    Real ang = pi * (2L * n - 1) / wp.kappa;
    Real step = pi / wp.kappa;
    Real pref = wp.A0 * 2L * ap::pow(x, wp.theta) * ap::exp(x * ap::cos(ang));
    Real phase0 = x * ap::sin(ang) + step * wp.theta;
    Real xinv = Real(1L, d) / x;
    Real xp(1L, d);
    int next = 0;
    auto term = [&](int j) -> Term {
        while (next < j) {
            xp *= xinv;
            ++next;
        }
        Real cj = ct.c[j].at_digits(d);
        Real v = cj * xp * ap::cos(phase0 - step * static_cast<long>(j));
        return {Complex(v), ap::abs(cj) * xp};
    };
    Truncated t = truncate(term, static_cast<int>(ct.c.size()), tp, d);
    return make_component(phase_label("Etilde", n), Complex(pref), t);
}

Component alg_hat_H21(const Real& x_in, const StruveParams& p, const TruncationPolicy& tp, int digits)
{
    if (p.kind() != ParamCase::NegativeA)
        throw Error(ErrorKind::InvalidInput, "Hhat21 needs a < 0");
    if (x_in.sign() <= 0)
        throw Error(ErrorKind::ZeroArgument, "x must be positive");
    if (long k = double_pole_index(p, tp.cap); k >= 0)
        throw Error(ErrorKind::DoublePole, "pole families coincide at k = " + std::to_string(k));
    const int d = digits;
    const Real pi = ap::pi(d);
    const Rational sigma = -p.a;
    Real x = x_in.at_digits(d);
    Real xinv = Real(1L, d) / x;
    Real logx = ap::log(x);

    // (1/pi) sum (-x)^{-k-1} Gamma(k+1/2) / Gamma(nu + 3/2 + sigma(k+1))
    Real g = ap::sqrt(pi);
    Real xk = xinv;
    int next = 0;
    auto term1 = [&](int k) -> Term {
        while (next < k) {
            g *= Real(Rational(2 * next + 1, 2), d);
            xk *= xinv;
            ++next;
        }
        Rational arg = p.nu + Rational(3, 2) + sigma * (k + 1);
        Real mag = g * xk;
        Real v = mag * rgamma_exact(arg, d);
        if (k % 2 == 0)
            v = -v;
        return {Complex(v), mag * rgamma_envelope(arg, d)};
    };
    Truncated t1 = truncate(term1, tp.cap, tp, d);

    // (1/sigma) sum x^{-k_s} / (k! Gamma(3/2 - k_s)), k_s = (k - nu - 1/2)/sigma
    Real fact(1L, d);
    int next2 = 0;
    auto term2 = [&](int k) -> Term {
        while (next2 < k) {
            ++next2;
            fact *= Real(static_cast<long>(next2), d);
        }
        Rational ks = (Rational(k) - p.nu - Rational(1, 2)) / sigma;
        Real mag = ap::exp(-Real(ks, d) * logx) / fact;
        Rational arg = Rational(3, 2) - ks;
        return {Complex(mag * rgamma_exact(arg, d)), mag * rgamma_envelope(arg, d)};
    };
    Truncated t2 = truncate(term2, tp.cap, tp, d);

    Component c;
    c.label = "Hhat21";
    c.parts.push_back(make_part("Hhat21-k", Complex(Real(1L, d) / pi), t1));
    c.parts.push_back(make_part("Hhat21-ks", Complex(Real(1L, d) / Real(sigma, d)), t2));
    c.value = c.parts[0].value + c.parts[1].value;
    c.error_estimate = c.parts[0].error_estimate + c.parts[1].error_estimate;
    c.terms_used = c.parts[0].terms_used + c.parts[1].terms_used;
    c.truncation_unstable = t1.unstable || t2.unstable;
    return c;
}

Component exp_hat_E21(const Real& x_in, const WrightParams& wp, const CoeffTable& ct, const TruncationPolicy& tp)
{
    require_coeffs(ct, wp);
    if (wp.kind != ParamCase::NegativeA)
        throw Error(ErrorKind::InvalidInput, "Ehat21 needs a < 0");
    if (x_in.sign() <= 0)
        throw Error(ErrorKind::ZeroArgument, "x must be positive");
    const int d = wp.digits;
    const Real pi = ap::pi(d);
    Real x = x_in.at_digits(d);
    Real sigma = Real(1L, d) - wp.kappa;
    Real X = wp.kappa * ap::pow(wp.h * x, Real(1L, d) / wp.kappa);
    Real ang = pi * sigma / wp.kappa;
    Real step = pi / wp.kappa;
    Real pref = wp.A0 / pi * ap::pow(X, wp.theta) * ap::exp(X * ap::cos(ang));
    Real phase0 = X * ap::sin(ang) + step * wp.theta;
    Real Xinv = Real(1L, d) / X;
    Real xp(1L, d);
    int next = 0;
    auto term = [&](int j) -> Term {
        while (next < j) {
            xp *= Xinv;
            ++next;
        }
        Real cj = ct.c[j].at_digits(d);
        // (-1)^{j-1} c_j X^{-j} sin(...)
        Real v = cj * xp * ap::sin(phase0 - step * static_cast<long>(j));
        if (j % 2 == 0)
            v = -v;
        return {Complex(v), ap::abs(cj) * xp};
    };
    Truncated t = truncate(term, static_cast<int>(ct.c.size()), tp, d);
    return make_component("Ehat21", Complex(pref), t);
}

AsymptoticEstimate assemble_pos(const Complex& z, const StruveParams& p, const CoeffTable& ct,
                                const TruncationPolicy& exp_tp, const TruncationPolicy& alg_tp, int digits)
{
    if (p.kind() != ParamCase::PositiveA)
        throw Error(ErrorKind::InvalidInput, "this expansion needs a > 0");
    if (z.is_zero())
        throw Error(ErrorKind::ZeroArgument, "z = 0");
    if (z.re.sign() < 0)
        throw Error(ErrorKind::SectorUnsupported, "only |arg z| <= pi/2 is covered");
    const int d = digits;
    WrightParams wp = derive_params(p, d);
    const Real pi = ap::pi(d);
    const Real two_pi = pi * 2L;
    const bool kappa_le_2 = wp.kappa_exact <= 2;
    const int N = exponential_count(wp.kappa.to_double());
    Real r = ap::norm(z.at_digits(d)) / 4L;

    AsymptoticEstimate e;
    Real phi(d);
    if (z.im.is_zero())
        phi = Real(d);
    else if (z.re.is_zero())
        phi = z.im.sign() > 0 ? pi : -pi;
    else
        phi = ap::arg(z.at_digits(d)) * 2L;
    e.regime = classify(wp, phi.to_double());

    auto E_at = [&](long n) {
        Component c = exp_expansion_E({r, phi + two_pi * n}, wp, ct, exp_tp);
        c.label = phase_label("E", n);
        return c;
    };

    if (z.im.is_zero()) {
        // algebraic part is maximally subdominant on the positive axis and dropped
        if (kappa_le_2)
            e.components.push_back(E_at(0));
        else
            for (long n = -N; n <= N; ++n)
                e.components.push_back(E_at(n));
    } else if (z.re.is_zero()) {
        Real X = wp.kappa * ap::pow(wp.h * r, Real(1L, d) / wp.kappa);
        const int top = kappa_le_2 ? 1 : N;
        for (int n = 1; n <= top; ++n)
            e.components.push_back(tilde_E_n(X, n, wp, ct, exp_tp));
        e.components.push_back(alg_expansion_H12({r, Real(d)}, p, alg_tp, d));
    } else {
        const long sgn = phi.sign() > 0 ? 1 : -1;
        if (kappa_le_2) {
            e.components.push_back(E_at(0));
            const double threshold = std::numbers::pi * (1 - wp.kappa.to_double() / 2);
            const double aphi = std::fabs(phi.to_double());
            if (std::fabs(aphi - threshold) < 1e-8) {
                e.stokes_warning = true;
                e.warnings.push_back("on the Stokes line of E(zeta e^{-/+2 pi i}); included in full");
            }
            if (aphi > threshold - 1e-8)
                e.components.push_back(E_at(-sgn));
        } else {
            for (long n = -N; n <= N; ++n)
                e.components.push_back(E_at(n));
        }
        Component h = alg_expansion_H12({r, phi - pi * sgn}, p, alg_tp, d);
        e.components.push_back(std::move(h));
    }
    if (e.regime.sector == Sector::StokesLine)
        e.stokes_warning = true;
    finish(e, d);
    return e;
}

bool wright_numerator_singular(const StruveParams& p)
{
    if (p.kind() != ParamCase::NegativeA)
        return false;
    // sigma n - nu - 1/2 in {0, -1, -2, ...} for some n >= 0
    const Rational sigma = -p.a;
    const Rational c = p.nu + Rational(1, 2);
    for (long m = 0;; ++m) {
        Rational n = (c - m) / sigma;
        if (n < 0)
            return false;
        if (is_integer(n))
            return true;
    }
}

AsymptoticEstimate assemble_neg_real(const Real& z, const StruveParams& p, const CoeffTable& ct,
                                     const TruncationPolicy& exp_tp, const TruncationPolicy& alg_tp, int digits)
{
    if (p.kind() != ParamCase::NegativeA)
        throw Error(ErrorKind::InvalidInput, "this expansion needs a < 0");
    if (z.sign() <= 0)
        throw Error(z.is_zero() ? ErrorKind::ZeroArgument : ErrorKind::SectorUnsupported, "z must be positive");
    const int d = digits;
    WrightParams wp = derive_params(p, d);
    const Rational sigma = -p.a;
    Real x = z.at_digits(d) * z.at_digits(d) / 4L;

    AsymptoticEstimate e;
    e.regime = classify(wp, std::numbers::pi * static_cast<double>(sigma));
    if (sigma < Rational(1, 2))
        e.components.push_back(exp_hat_E21(x, wp, ct, exp_tp));
    e.components.push_back(alg_hat_H21(x, p, alg_tp, d));
    if (wright_numerator_singular(p))
        e.warnings.push_back("Gamma(sigma n - nu - 1/2) is singular for some n; algebraic sums used as is");
    finish(e, d);
    return e;
}

AsymptoticEstimate assemble_neg_imag(const Real& abs_z, const StruveParams& p, const TruncationPolicy& alg_tp,
                                     int digits)
{
    if (p.kind() != ParamCase::NegativeA)
        throw Error(ErrorKind::InvalidInput, "this expansion needs a < 0");
    if (abs_z.sign() <= 0)
        throw Error(ErrorKind::ZeroArgument, "|z| must be positive");
    const int d = digits;
    const Real pi = ap::pi(d);
    const Rational sigma = -p.a;
    Real x = abs_z.at_digits(d) * abs_z.at_digits(d) / 4L;
    Real xinv = Real(1L, d) / x;

    // (1/pi) sum Gamma(k+1/2) x^{-k-1} / Gamma(nu + 3/2 + sigma(k+1))
    Real g = ap::sqrt(pi);
    Real xk = xinv;
    int next = 0;
    auto term = [&](int k) -> Term {
        while (next < k) {
            g *= Real(Rational(2 * next + 1, 2), d);
            xk *= xinv;
            ++next;
        }
        Rational arg = p.nu + Rational(3, 2) + sigma * (k + 1);
        Real mag = g * xk;
        return {Complex(mag * rgamma_exact(arg, d)), mag * rgamma_envelope(arg, d)};
    };
    Truncated t = truncate(term, alg_tp.cap, alg_tp, d);

    AsymptoticEstimate e;
    e.regime = Regime{Sector::AlgebraicOnly, Dominance::Algebraic, exponential_count(1 - static_cast<double>(sigma))};
    e.components.push_back(make_component("Hhat21(x e^{pi i})", Complex(Real(1L, d) / pi), t));
    finish(e, d);
    return e;
}

void require_stable(const AsymptoticEstimate& e)
{
    for (const auto& c : e.components) {
        bool bad = c.truncation_unstable;
        for (const auto& part : c.parts)
            bad = bad || part.truncation_unstable;
        if (bad)
            throw Error(ErrorKind::TruncationUnstable, "component " + c.label + " did not reach its smallest term");
    }
}

}  // namespace gstruve
