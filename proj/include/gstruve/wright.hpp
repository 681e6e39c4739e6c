#pragma once

#include "gstruve/ap.hpp"

#include <string>

namespace gstruve {

enum class ParamCase { PositiveA, NegativeA, ZeroA };

// Parameters (a, nu) of the generalized Struve function, held exactly.
// a > -1 is enforced on construction.
struct StruveParams {
    Rational a;
    Rational nu;

    StruveParams(Rational a_, Rational nu_);
    static StruveParams parse(std::string_view a, std::string_view nu);

    ParamCase kind() const;
    Rational sigma() const { return -a; }  // meaningful for a < 0
    std::string describe() const;
};

// Constants of the Wright function that carries the large-argument behaviour.
// For a > 0 it is a 1Psi2, for a = -sigma < 0 a 2Psi1.
struct WrightParams {
    ParamCase kind;
    int digits;
    ap::Real kappa;
    ap::Real h;
    ap::Real theta;        // -nu - 3/2
    ap::Real theta_prime;  // 1 - theta
    ap::Real A0;
    Rational kappa_exact;  // 1 + a
};

WrightParams derive_params(const StruveParams& p, int digits);

enum class Sector {
    ExponentiallyLarge,
    AntiStokesLine,
    ExponentiallySmallPlusAlgebraic,
    StokesLine,
    AlgebraicOnly,
};

enum class Dominance { Exponential, Algebraic, Comparable };

struct Regime {
    Sector sector;
    Dominance dominant;
    int n_range;  // smallest N >= 0 with 2N + 1 > kappa/2
};

const char* to_string(Sector s);
const char* to_string(Dominance d);

int exponential_count(double kappa);

// Sector of arg(zeta) for the function whose expansion has growth index kappa.
Regime classify(double kappa, double arg_zeta, double angle_tol = 1e-12);
Regime classify(const WrightParams& wp, double arg_zeta, double angle_tol = 1e-12);

}  // namespace gstruve
