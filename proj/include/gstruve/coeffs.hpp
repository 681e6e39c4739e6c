#pragma once

#include "gstruve/ap.hpp"
#include "gstruve/wright.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gstruve {

enum class CoeffMethod { LinearSolve, ClosedForm };

// Coefficients c_0 = 1, c_1, ..., c_{M-1} of the inverse factorial expansion
//   Gamma(kappa s + theta') g(s) / Gamma(1 + s) / (kappa A0 (h kappa^kappa)^s)
//     = sum_j c_j / (kappa s + theta')_j
// attached to the Wright function of the given parameters.
struct CoeffTable {
    Rational a;
    Rational nu;
    int M = 0;
    std::vector<ap::Real> c;
    CoeffMethod method = CoeffMethod::LinearSolve;
    ap::Real residual;  // max_j |c_j - c_j'| / max(1, |c_j|) between two independent node sets
    int precision = 0;
};

struct ClosedFormC123 {
    Rational c1, c2, c3;
};

// c_1..c_3 as exact polynomials in (a, nu); a != 0.
ClosedFormC123 closed_form_c123(const StruveParams& p);

struct FitOptions {
    double w0 = 0;          // smallest |kappa s + theta'| sampled; 0 chooses from M
    int extra_columns = 0;  // columns beyond M absorbing the truncated tail; 0 chooses
    double ray_angle = 0;   // sample s on arg s = -ray_angle (complex continuation only)
};

// Least-squares fit of the expansion at large s. Accuracy target is about
// digits/2 + 10 correct digits in each c_j. Throws IllConditioned when the
// residual exceeds 10^(-digits/2).
CoeffTable solve_coeffs(const StruveParams& p, int M, int digits, const FitOptions& opt = {});

// Coefficients for a = -sigma obtained by continuing the 1Psi2 ratio to
// negative a and sampling in the lower half-plane where the continuation
// factor tends to one. Returned table is complex; real parts in `c`,
// imaginary parts in `c_imag`.
struct ContinuedTable {
    CoeffTable table;
    std::vector<ap::Real> c_imag;
};
ContinuedTable solve_coeffs_continued(const StruveParams& p, int M, int digits, const FitOptions& opt = {});

struct ContinuationReport {
    Rational sigma;
    Rational nu;
    int M = 0;
    int precision = 0;
    std::vector<ap::Real> direct;          // from the 2Psi1 at a = -sigma
    std::vector<ap::Real> continued_re;    // from the continued 1Psi2
    std::vector<ap::Real> continued_im;
    ap::Real max_discrepancy;              // max_j |direct_j - continued_j|
    ap::Real residual_direct;
    ap::Real residual_continued;
};

ContinuationReport verify_appendix_identity(const Rational& sigma, const Rational& nu, int M, int digits);

// Continued-fraction reconstruction of p/q with q <= 10^((reliable_digits - 8)/2),
// accepted when it reproduces x to reliable_digits - 4 digits.
std::optional<Rational> reconstruct_rational(const ap::Real& x, int reliable_digits);

nlohmann::json to_json(const CoeffTable& t);
CoeffTable coeff_table_from_json(const nlohmann::json& j);

// Thread-safe memo of solved tables keyed by (a, nu, M, precision).
// With a directory set, tables are also read from and written to JSON files.
class CoeffCache {
public:
    explicit CoeffCache(std::string directory = {}) : dir_(std::move(directory)) {}
    CoeffTable get(const StruveParams& p, int M, int digits);

private:
    using Key = std::tuple<std::string, std::string, int, int>;
    std::string dir_;
    std::mutex mu_;
    std::map<Key, CoeffTable> mem_;
};

}  // namespace gstruve
