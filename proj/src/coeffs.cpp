#include "gstruve/coeffs.hpp"

#include "gstruve/errors.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>

namespace gstruve {

using ap::Complex;
using ap::Real;

ClosedFormC123 closed_form_c123(const StruveParams& p)
{
    const Rational& a = p.a;
    const Rational& v = p.nu;
    if (a == 0)
        throw Error(ErrorKind::DegenerateParameter, "closed form needs a != 0");
    const Rational v2 = v * v, v3 = v2 * v, v4 = v3 * v, v5 = v4 * v, v6 = v5 * v;
    const Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;

    ClosedFormC123 r;
    r.c1 = -(11 + 24 * v + 12 * v2 - a * (25 + 24 * v) + 11 * a2) / (24 * a);
    r.c2 = (265 + 1056 * v + 1416 * v2 + 768 * v3 + 144 * v4
            - 2 * a * (791 + 2040 * v + 1596 * v2 + 384 * v3)
            + 3 * a2 * (905 + 1360 * v + 472 * v2)
            - 2 * a3 * (791 + 528 * v) + 265 * a4)
           / (1152 * a2);
    r.c3 = -((48703 + 286200 * v + 617940 * v2 + 636480 * v3 + 334800 * v4 + 86400 * v5 + 8640 * v6)
             - 3 * a * (189797 + 791400 * v + 1179240 * v2 + 797760 * v3 + 248400 * v4 + 28800 * v5)
             + 6 * a2 * (355459 + 1019700 * v + 996570 * v2 + 398880 * v3 + 55800 * v4)
             - a3 * (3254507 + 6118200 * v + 3537720 * v2 + 636480 * v3)
             + 6 * a4 * (355459 + 395700 * v + 102990 * v2)
             - 3 * a5 * (189797 + 95400 * v) + 48703 * a6)
           / (414720 * a3);
    return r;
}

namespace {

Real conj_s(const Real& x) { return x; }
Complex conj_s(const Complex& x) { return ap::conj(x); }
Real abs_s(const Real& x) { return ap::abs(x); }
Real abs_s(const Complex& x) { return ap::abs(x); }
Real unit_phase(const Real& x, int d) { return Real(x.sign() < 0 ? -1L : 1L, d); }
Complex unit_phase(const Complex& x, int d)
{
    Real m = ap::abs(x);
    if (m.is_zero())
        return Complex(Real(1L, d));
    return x / m;
}
Real make_scalar(const Real& r, const Real&) { return r; }
Complex make_scalar(const Real& r, const Complex&) { return Complex(r); }

// Householder least squares: minimizes |A x - b| for a tall A (rows x cols).
template <class S>
std::vector<S> least_squares(std::vector<std::vector<S>> A, std::vector<S> b, int d)
{
    const size_t m = A.size(), n = A[0].size();
    for (size_t k = 0; k < n; ++k) {
        Real nrm2(d);
        for (size_t i = k; i < m; ++i) {
            Real t = abs_s(A[i][k]);
            nrm2 += t * t;
        }
        Real nrm = ap::sqrt(nrm2);
        if (nrm.is_zero())
            throw Error(ErrorKind::IllConditioned, "rank-deficient fit matrix");
        S alpha = unit_phase(A[k][k], d) * (-nrm);
        std::vector<S> v(m - k);
        for (size_t i = k; i < m; ++i)
            v[i - k] = A[i][k];
        v[0] -= alpha;
        Real vn2(d);
        for (auto& x : v) {
            Real t = abs_s(x);
            vn2 += t * t;
        }
        if (vn2.is_zero())
            continue;
        auto reflect = [&](auto&& get) {
            S dot = make_scalar(Real(d), v[0]);
            for (size_t i = k; i < m; ++i)
                dot += conj_s(v[i - k]) * get(i);
            S f = dot * (Real(2L, d) / vn2);
            for (size_t i = k; i < m; ++i)
                get(i) -= v[i - k] * f;
        };
        for (size_t j = k; j < n; ++j)
            reflect([&](size_t i) -> S& { return A[i][j]; });
        reflect([&](size_t i) -> S& { return b[i]; });
    }
    std::vector<S> x(n);
    for (size_t kk = n; kk-- > 0;) {
        S s = b[kk];
        for (size_t j = kk + 1; j < n; ++j)
            s -= A[kk][j] * x[j];
        if (abs_s(A[kk][kk]).is_zero())
            throw Error(ErrorKind::IllConditioned, "singular triangular factor");
        x[kk] = s / A[kk][kk];
    }
    return x;
}

struct FitPlan {
    int extra;
    double w0;
    int work_digits;
};

// attempt > 0 widens the node scale and adds tail columns after a failed residual check
FitPlan plan_fit(int M, int digits, const FitOptions& opt, double min_w0, int attempt = 0)
{
    const int goal = digits / 2 + 10;
    int extra = opt.extra_columns > 0 ? opt.extra_columns : static_cast<int>(std::ceil(goal / 1.6)) + 2;
    extra += 8 * attempt;
    const int total = M + extra;
    double w0 = opt.w0 > 0 ? opt.w0 : 50.0 * total;
    w0 *= std::pow(4.0, attempt);
    w0 = std::max(w0, min_w0);
    int work = goal + static_cast<int>(std::ceil((M - 1) * std::log10(2 * w0) + 0.8 * total)) + 20;
    return {extra, w0, std::max(work, digits + 10)};
}

// Fits F(w) = sum_j c_j / (w)_j on sample points w_k = |w_k| e^{i phase}.
template <class S>
std::vector<S> fit_once(const std::function<S(const S&)>& F, int total, double w0, double phase, int d)
{
    const int K = total + 6;
    const Real scale(static_cast<long>(std::llround(w0)), d);
    std::vector<std::vector<S>> A(K, std::vector<S>(total));
    std::vector<S> b(K);
    const Real pi = ap::pi(d);
    for (int k = 0; k < K; ++k) {
        // Chebyshev points for 1/|w| in [1/(2 w0), 1/w0]
        Real t = ap::cos(pi * Real(Rational(2 * k + 1, 2 * K), d));
        Real u = (Real(Rational(3, 4), d) + t / 4L) / scale;
        Real modulus = Real(1L, d) / u;
        S w;
        if constexpr (std::is_same_v<S, Real>)
            w = modulus;
        else
            w = Complex::polar(modulus, Real::from_double(phase, d));
        // columns scaled by w0^j keep entries of unit size
        S col = make_scalar(Real(1L, d), w);
        for (int j = 0; j < total; ++j) {
            A[k][j] = col;
            col = col * make_scalar(scale, w) / (w + make_scalar(Real(static_cast<long>(j), d), w));
        }
        b[k] = F(w);
    }
    std::vector<S> y = least_squares(std::move(A), std::move(b), d);
    Real sj(1L, d);
    for (int j = 0; j < total; ++j) {
        y[j] = y[j] * make_scalar(sj, y[j]);
        sj *= scale;
    }
    return y;
}

template <class S>
std::pair<std::vector<S>, Real> fit_with_residual(const std::function<S(const S&)>& F, int M, const FitPlan& plan,
                                                  double phase)
{
    const int d = plan.work_digits;
    const int total = M + plan.extra;
    std::vector<S> c1 = fit_once<S>(F, total, plan.w0, phase, d);
    std::vector<S> c2 = fit_once<S>(F, total, plan.w0 * 1.5, phase, d);
    Real res(d);
    for (int j = 0; j < M; ++j) {
        Real den = ap::max(Real(1L, d), abs_s(c1[j]));
        res = ap::max(res, abs_s(c1[j] - c2[j]) / den);
    }
    c1.resize(M);
    return {std::move(c1), res};
}

constexpr int kFitAttempts = 4;

bool residual_ok(const Real& res, int digits)
{
    return res <= ap::pow10(-digits / 2, digits);
}

void check_residual(const Real& res, int digits)
{
    if (!residual_ok(res, digits))
        throw Error(ErrorKind::IllConditioned,
                    "coefficient fit residual " + res.to_string(3) + " exceeds 1e-" + std::to_string(digits / 2));
}

void check_M(int M)
{
    if (M < 1)
        throw Error(ErrorKind::InvalidInput, "M must be positive");
}

}  // namespace

namespace {

// F(w) for real w on the principal case of the parameters, at working precision d.
std::function<Real(const Real&)> direct_sampler(const StruveParams& p, int d)
{
    WrightParams wp = derive_params(p, d);
    Real a(p.a, d), nu(p.nu, d);
    Real three_halves(Rational(3, 2), d);
    Real log_norm = ap::log(wp.kappa * wp.A0);
    Real log_rate = ap::log(wp.h * ap::pow(wp.kappa, wp.kappa));
    const bool positive = p.kind() == ParamCase::PositiveA;
    Real nu_half = nu + Real(Rational(1, 2), d);
    return [=](const Real& w) {
        Real s = (w - wp.theta_prime) / wp.kappa;
        Real l = ap::lgamma_abs(w) - ap::lgamma_abs(s + three_halves) - log_norm - s * log_rate;
        if (positive)
            l -= ap::lgamma_abs(a * s + nu + three_halves);
        else
            l += ap::lgamma_abs(-a * s - nu_half);
        return ap::exp(l);
    };
}

// The 1Psi2 ratio continued to a = -sigma, normalized by its lower half-plane
// exponential factor, for complex w.
std::function<Complex(const Complex&)> continued_sampler(const StruveParams& p, int d)
{
    Real sigma(-p.a, d), nu(p.nu, d);
    Real kappa(Rational(1) + p.a, d);
    Real one(1L, d);
    Real three_halves(Rational(3, 2), d);
    Real theta_prime = nu + Real(Rational(5, 2), d);
    Real pi = ap::pi(d);
    Real log_norm = ap::log(kappa * ap::pow(kappa / sigma, nu + one) / ap::sqrt(pi * 2L));
    Real log_rate = ap::log(ap::pow(sigma, sigma) * ap::pow(kappa, kappa));
    return [=](const Complex& w) {
        Complex s = (w - Complex(theta_prime)) / kappa;
        Complex g2 = Complex(nu + three_halves) - s * sigma;
        Complex l = ap::lgamma(w) - ap::lgamma(g2) - ap::lgamma(s + Complex(three_halves));
        l -= Complex(log_norm) + s * log_rate;
        // branch factor exp(pi i (sigma s - nu - 1))
        Complex br = (s * sigma - Complex(nu + one)) * pi;
        l -= Complex(-br.im, br.re);
        return ap::exp(l);
    };
}

template <class S, class MakeF>
std::pair<std::vector<S>, Real> solve_adaptive(MakeF make_F, int M, int digits, const FitOptions& opt,
                                               double min_w0, double phase)
{
    std::pair<std::vector<S>, Real> best;
    for (int attempt = 0; attempt < kFitAttempts; ++attempt) {
        FitPlan plan = plan_fit(M, digits, opt, min_w0, attempt);
        std::function<S(const S&)> F = make_F(plan.work_digits);
        auto r = fit_with_residual<S>(F, M, plan, phase);
        if (attempt == 0 || r.second < best.second)
            best = std::move(r);
        if (residual_ok(best.second, digits))
            break;
    }
    check_residual(best.second, digits);
    return best;
}

}  // namespace

CoeffTable solve_coeffs(const StruveParams& p, int M, int digits, const FitOptions& opt)
{
    check_M(M);
    derive_params(p, 10);  // rejects a = 0
    auto [c, res] = solve_adaptive<Real>([&](int d) { return direct_sampler(p, d); }, M, digits, opt, 0, 0);

    CoeffTable t;
    t.a = p.a;
    t.nu = p.nu;
    t.M = M;
    t.method = CoeffMethod::LinearSolve;
    t.precision = digits;
    t.residual = res.at_digits(digits);
    for (auto& x : c)
        t.c.push_back(x.at_digits(digits));
    t.c[0] = Real(1L, digits);  // fixed by the normalization; the fit returns 1 to working accuracy
    return t;
}

ContinuedTable solve_coeffs_continued(const StruveParams& p, int M, int digits, const FitOptions& opt)
{
    check_M(M);
    if (p.kind() != ParamCase::NegativeA)
        throw Error(ErrorKind::InvalidInput, "continuation applies to a < 0");
    const double theta = opt.ray_angle > 0 ? opt.ray_angle : std::numbers::pi / 5;
    const double sigma_d = static_cast<double>(-p.a);
    const double kappa_d = 1 - sigma_d;
    // continuation factor is 1 + O(exp(-2 pi sigma |Im s|)); push it below the goal
    const int goal = digits / 2 + 20;
    const double min_w0 = kappa_d * (goal * std::log(10.0)) / (2 * std::numbers::pi * sigma_d * std::sin(theta));
    auto [c, res] =
        solve_adaptive<Complex>([&](int d) { return continued_sampler(p, d); }, M, digits, opt, min_w0, -theta);

    ContinuedTable out;
    CoeffTable& t = out.table;
    t.a = p.a;
    t.nu = p.nu;
    t.M = M;
    t.method = CoeffMethod::LinearSolve;
    t.precision = digits;
    t.residual = res.at_digits(digits);
    for (auto& x : c) {
        t.c.push_back(x.re.at_digits(digits));
        out.c_imag.push_back(x.im.at_digits(digits));
    }
    return out;
}

ContinuationReport verify_appendix_identity(const Rational& sigma, const Rational& nu, int M, int digits)
{
    if (sigma <= 0 || sigma >= 1)
        throw Error(ErrorKind::DegenerateParameter, "sigma must lie in (0, 1)");
    StruveParams p(-sigma, nu);
    CoeffTable direct = solve_coeffs(p, M, digits);
    ContinuedTable cont = solve_coeffs_continued(p, M, digits);

    ContinuationReport r;
    r.sigma = sigma;
    r.nu = nu;
    r.M = M;
    r.precision = digits;
    r.direct = direct.c;
    r.continued_re = cont.table.c;
    r.continued_im = cont.c_imag;
    r.residual_direct = direct.residual;
    r.residual_continued = cont.table.residual;
    r.max_discrepancy = Real(digits);
    for (int j = 0; j < M; ++j) {
        Complex diff(direct.c[j] - cont.table.c[j], cont.c_imag[j]);
        r.max_discrepancy = ap::max(r.max_discrepancy, ap::abs(diff));
    }
    return r;
}

std::optional<Rational> reconstruct_rational(const Real& x, int reliable_digits)
{
    const int d = x.digits();
    const Real tol = ap::pow10(-(reliable_digits - 4), d) * ap::max(Real(1L, d), ap::abs(x));
    const Integer qmax = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::max(1, (reliable_digits - 8) / 2)));
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Real y = x;
    for (int it = 0; it < 4 * reliable_digits + 10; ++it) {
        Real fl = ap::floor(y);
        Integer ak;
        mpfr_get_z(ak.backend().data(), fl.raw(), MPFR_RNDN);
        Integer p2 = ak * p1 + p0, q2 = ak * q1 + q0;
        if (q2 > qmax)
            return std::nullopt;
        Rational cand(p2, q2);
        if (ap::abs(x - Real(cand, d)) <= tol)
            return cand;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Real frac = y - fl;
        if (frac.is_zero())
            return std::nullopt;
        y = Real(1L, d) / frac;
    }
    return std::nullopt;
}

nlohmann::json to_json(const CoeffTable& t)
{
    nlohmann::json j;
    j["a"] = t.a.str();
    j["nu"] = t.nu.str();
    j["M"] = t.M;
    j["precision"] = t.precision;
    j["method"] = t.method == CoeffMethod::LinearSolve ? "LinearSolve" : "ClosedForm";
    j["residual"] = t.residual.to_string(6);
    auto& arr = j["c"] = nlohmann::json::array();
    for (const auto& c : t.c)
        arr.push_back(c.to_string());
    return j;
}

CoeffTable coeff_table_from_json(const nlohmann::json& j)
{
    CoeffTable t;
    t.a = parse_rational(j.at("a").get<std::string>());
    t.nu = parse_rational(j.at("nu").get<std::string>());
    t.M = j.at("M").get<int>();
    t.precision = j.at("precision").get<int>();
    t.method = j.at("method").get<std::string>() == "ClosedForm" ? CoeffMethod::ClosedForm : CoeffMethod::LinearSolve;
    t.residual = Real(j.at("residual").get<std::string>(), t.precision);
    for (const auto& s : j.at("c"))
        t.c.emplace_back(s.get<std::string>(), t.precision);
    if (static_cast<int>(t.c.size()) != t.M)
        throw Error(ErrorKind::InvalidInput, "coefficient count does not match M");
    return t;
}

CoeffTable CoeffCache::get(const StruveParams& p, int M, int digits)
{
    Key key{p.a.str(), p.nu.str(), M, digits};
    {
        std::lock_guard lock(mu_);
        if (auto it = mem_.find(key); it != mem_.end())
            return it->second;
    }
    std::filesystem::path file;
    if (!dir_.empty()) {
        std::string name = "coeffs_" + p.a.str() + "_" + p.nu.str() + "_" + std::to_string(M) + "_" +
                           std::to_string(digits) + ".json";
        for (auto& ch : name)
            if (ch == '/')
                ch = 'o';
        file = std::filesystem::path(dir_) / name;
    }
    std::optional<CoeffTable> t;
    if (!file.empty() && std::filesystem::exists(file)) {
        std::ifstream in(file);
        t = coeff_table_from_json(nlohmann::json::parse(in));
    } else {
        t = solve_coeffs(p, M, digits);
        if (!file.empty()) {
            std::filesystem::create_directories(dir_);
            std::ofstream(file) << to_json(*t).dump(1) << '\n';
        }
    }
    std::lock_guard lock(mu_);
    return mem_.emplace(key, std::move(*t)).first->second;
}

}  // namespace gstruve
