#pragma once

#include "gstruve/ap.hpp"
#include "gstruve/coeffs.hpp"
#include "gstruve/wright.hpp"

#include <string>
#include <vector>

namespace gstruve {

// Fixed: sum indices 0..j_max. Optimal: scan term envelopes until they rise
// twice in a row, then sum the terms before the smallest one.
struct TruncationPolicy {
    enum class Mode { Fixed, Optimal };
    Mode mode = Mode::Optimal;
    int j_max = 0;
    int cap = 400;

    static TruncationPolicy optimal(int cap = 400) { return {Mode::Optimal, 0, cap}; }
    static TruncationPolicy fixed(int j_max) { return {Mode::Fixed, j_max, j_max + 1}; }
};

enum class Role { Dominant, Subdominant, Comparable };
const char* to_string(Role r);

struct PartialSum {
    std::string label;
    ap::Complex value;
    int terms_used = 0;  // indices 0..terms_used-1 were summed
    ap::Real error_estimate;  // magnitude of the first omitted term, prefactor included
    bool truncation_unstable = false;
};

struct Component {
    std::string label;
    ap::Complex value;
    int terms_used = 0;
    ap::Real error_estimate;
    Role role = Role::Subdominant;
    bool truncation_unstable = false;
    std::vector<PartialSum> parts;  // set when the component is a sum of separately truncated series
};

struct AsymptoticEstimate {
    ap::Complex value;  // sum of the component values, in order
    std::vector<Component> components;
    ap::Real error_estimate;
    Regime regime{};
    bool stokes_warning = false;
    std::vector<std::string> warnings;
};

// zeta = modulus * exp(i phase) with the phase kept off the principal branch.
struct PhasedArg {
    ap::Real modulus;
    ap::Real phase;
};

// A0 Z^theta e^Z sum_j c_j Z^{-j} with Z = kappa (h zeta)^{1/kappa}.
Component exp_expansion_E(const PhasedArg& zeta, const WrightParams& wp, const CoeffTable& ct,
                          const TruncationPolicy& tp);

// (1/pi) sum_k Gamma(k+1/2) zeta^{-k-1} / Gamma(nu + 3/2 - a(1+k)), a > 0.
Component alg_expansion_H12(const PhasedArg& zeta, const StruveParams& p, const TruncationPolicy& tp, int digits);

// Sum of the conjugate pair E(x e^{(2n-1)pi i}) + E(x e^{-(2n-1)pi i}) written in real form; X > 0.
Component tilde_E_n(const ap::Real& X, int n, const WrightParams& wp, const CoeffTable& ct,
                    const TruncationPolicy& tp);

// Algebraic expansion for a = -sigma on the positive real axis: two sums,
// one from the poles at s = 1 + k and one from s = (k - nu - 1/2)/sigma.
// Throws DoublePole when the two pole families meet.
Component alg_hat_H21(const ap::Real& x, const StruveParams& p, const TruncationPolicy& tp, int digits);

// Exponential expansion for a = -sigma on the positive real axis (real form).
Component exp_hat_E21(const ap::Real& x, const WrightParams& wp, const CoeffTable& ct, const TruncationPolicy& tp);

// Large-|z| expansion of the normalized function for a > 0 and |arg z| <= pi/2.
AsymptoticEstimate assemble_pos(const ap::Complex& z, const StruveParams& p, const CoeffTable& ct,
                                const TruncationPolicy& exp_tp, const TruncationPolicy& alg_tp, int digits);

// a = -sigma, z > 0. The exponential part is included for sigma < 1/2 only.
AsymptoticEstimate assemble_neg_real(const ap::Real& z, const StruveParams& p, const CoeffTable& ct,
                                     const TruncationPolicy& exp_tp, const TruncationPolicy& alg_tp, int digits);

// a = -sigma, z = i|z|: purely algebraic.
AsymptoticEstimate assemble_neg_imag(const ap::Real& abs_z, const StruveParams& p, const TruncationPolicy& alg_tp,
                                     int digits);

// Parameter combinations for which the 2Psi1 numerator Gamma(sigma n - nu - 1/2)
// is singular for some n >= 0. The second algebraic sum is still used.
bool wright_numerator_singular(const StruveParams& p);

// Throws TruncationUnstable if any component or partial sum carries the flag.
void require_stable(const AsymptoticEstimate& e);

}  // namespace gstruve
