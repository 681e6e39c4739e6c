#pragma once

#include "gstruve/ap.hpp"
#include "gstruve/wright.hpp"

#include <optional>

namespace gstruve {

// Gamma at a real argument; negative arguments go through the reflection formula.
// Throws PoleOfGamma within 10^(4-P) of a nonpositive integer.
ap::Real gamma_ap(const ap::Real& x);
// 1/Gamma at an exact rational argument; exactly zero at the poles.
ap::Real rgamma_exact(const Rational& x, int digits);
// |1/Gamma(x)| with the oscillating sin(pi x) factor removed for x <= 0:
// equals |1/Gamma(x)| for x > 0 and Gamma(1-x)/pi otherwise.
ap::Real rgamma_envelope(const Rational& x, int digits);

enum class Method { Series, Asymptotic };

struct EvalResult {
    ap::Complex value;         // normalized function, entire in z
    ap::Complex unnormalized;  // (z/2)^(nu+1) times value, principal branch
    int terms_used = 0;
    ap::Real error_estimate;
    double cancellation_digits = 0;  // log10(max term / |sum|)
    int precision_used = 0;
    Method method = Method::Series;
};

// Power series of the normalized function at working precision `digits`.
// Throws PrecisionExhausted when cancellation eats all but 10 digits.
EvalResult eval_series(const ap::Complex& z, const StruveParams& p, int digits);

// Same series at z = i x (x real): the alternating sum in (x/2)^2.
EvalResult eval_alternating(const ap::Real& x, const StruveParams& p, int digits);

struct Escalation {
    int cap = 400;               // largest working precision tried
    int min_correct_digits = 0;  // escalate until digits - cancellation reaches this
};

// Retries with doubled precision after PrecisionExhausted or when fewer than
// min_correct_digits survive the cancellation.
EvalResult eval_series_escalating(const ap::Complex& z, const StruveParams& p, int digits,
                                  const Escalation& esc = {});

}  // namespace gstruve
