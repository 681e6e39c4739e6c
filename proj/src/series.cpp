#include "gstruve/series.hpp"

#include "gstruve/errors.hpp"

#include <cmath>
#include <limits>

namespace gstruve {

using ap::Complex;
using ap::Real;

Real gamma_ap(const Real& x)
{
    const int d = x.digits();
    if (x.sign() <= 0) {
        Real dist = ap::abs(x - ap::round(x));
        if (dist < ap::pow10(4 - d, d))
            throw Error(ErrorKind::PoleOfGamma, "argument " + x.to_string(20) + " is at a pole");
    }
    if (x < Real(Rational(1, 2), d)) {
        Real one(1L, d);
        Real pi = ap::pi(d);
        return pi / (ap::sin(pi * x) * ap::tgamma(one - x));
    }
    return ap::tgamma(x);
}

Real rgamma_exact(const Rational& q, int digits)
{
    if (is_nonpositive_integer(q))
        return Real(digits);
    Real x(q, digits);
    if (q < Rational(1, 2)) {
        Real pi = ap::pi(digits);
        return ap::sin(pi * x) * ap::tgamma(Real(1L, digits) - x) / pi;
    }
    return Real(1L, digits) / ap::tgamma(x);
}

Real rgamma_envelope(const Rational& q, int digits)
{
    Real x(q, digits);
    if (q > 0)
        return Real(1L, digits) / ap::tgamma(x);
    return ap::tgamma(Real(1L, digits) - x) / ap::pi(digits);
}

EvalResult eval_series(const Complex& z, const StruveParams& p, int digits)
{
    const int d = digits;
    Complex zz = z.at_digits(d);
    Complex q = zz * zz / Real(4L, d);

    const Rational three_halves(3, 2);
    Real rg1 = Real(2L, d) / ap::sqrt(ap::pi(d));  // 1/Gamma(3/2)
    Complex qn(Real(1L, d));
    Complex sum(d);
    Real max_term(d), max_sum(d), prev_mag(d);
    Real eps = ap::pow10(-d, d);
    Real err(d);
    int n = 0;
    const int hard_limit = 200000;
    for (;; ++n) {
        if (n >= hard_limit)
            throw Error(ErrorKind::PrecisionExhausted, "series did not settle within the term limit");
        Real rg2 = rgamma_exact(p.a * n + p.nu + three_halves, d);
        Complex term = qn * (rg1 * rg2);
        sum += term;
        Real mag = ap::abs(term);
        max_term = ap::max(max_term, mag);
        max_sum = ap::max(max_sum, ap::abs(sum));
        // a vanishing 1/Gamma factor says nothing about convergence
        bool informative = !rg2.is_zero() || q.is_zero();
        if (informative && n > 0 && mag < prev_mag && mag <= eps * max_sum) {
            Real r = mag / prev_mag;
            if (r.to_double() < 1)
                err = mag * r / (Real(1L, d) - r);
            else
                err = mag;
            break;
        }
        if (informative)
            prev_mag = mag;
        qn *= q;
        rg1 /= Real(Rational(2 * n + 3, 2), d);
    }

    EvalResult res;
    res.terms_used = n + 1;
    res.precision_used = d;
    Real abs_sum = ap::abs(sum);
    res.cancellation_digits = abs_sum.is_zero() ? std::numeric_limits<double>::infinity()
                                                : ap::log10_abs(max_term) - ap::log10_abs(abs_sum);
    if (res.cancellation_digits < 0)
        res.cancellation_digits = 0;
    if (res.cancellation_digits > d - 10)
        throw Error(ErrorKind::PrecisionExhausted,
                    "cancellation of " + std::to_string(res.cancellation_digits) + " digits at precision " +
                        std::to_string(d));
    res.error_estimate = err + max_term * eps;
    res.value = sum;
    if (zz.is_zero()) {
        res.unnormalized = Complex(d);
    } else {
        Real nu1(p.nu + 1, d);
        res.unnormalized = ap::pow(zz / Real(2L, d), nu1) * sum;
    }
    res.method = Method::Series;
    return res;
}

EvalResult eval_alternating(const Real& x, const StruveParams& p, int digits)
{
    return eval_series(Complex(Real(digits), x), p, digits);
}

EvalResult eval_series_escalating(const Complex& z, const StruveParams& p, int digits, const Escalation& esc)
{
    int d = digits;
    for (;;) {
        try {
            EvalResult r = eval_series(z, p, d);
            if (d - r.cancellation_digits >= esc.min_correct_digits || d >= esc.cap)
                return r;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PrecisionExhausted || d >= esc.cap)
                throw;
        }
        d = std::min(2 * d, esc.cap);
    }
}

}  // namespace gstruve
