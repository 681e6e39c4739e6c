#include "gstruve/errors.hpp"
#include "gstruve/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>

using namespace gstruve;
using ap::Complex;
using ap::Real;

namespace {

int prec_cap()
{
    if (const char* s = std::getenv("STRUVE_PREC_CAP"))
        return std::max(10, std::atoi(s));
    return 400;
}

// "15", "3.5,-2", "20i"
Complex parse_z(const std::string& text, int d)
{
    if (!text.empty() && text.back() == 'i')
        return Complex(Real(d), Real(text.substr(0, text.size() - 1), d));
    if (auto comma = text.find(','); comma != std::string::npos)
        return Complex(Real(text.substr(0, comma), d), Real(text.substr(comma + 1), d));
    return Complex(Real(text, d));
}

TruncationPolicy parse_trunc(const std::string& s)
{
    if (s == "opt")
        return TruncationPolicy::optimal();
    int n = std::stoi(s);
    if (n < 0)
        throw Error(ErrorKind::InvalidInput, "--trunc must be >= 0 or 'opt'");
    return TruncationPolicy::fixed(n);
}

// Coefficients needed to reach the smallest term of the exponential series at |z|.
int coefficients_for(const StruveParams& p, const Real& abs_z, const TruncationPolicy& tp)
{
    if (tp.mode == TruncationPolicy::Mode::Fixed)
        return tp.j_max + 2;  // one more for the error estimate
    double a = static_cast<double>(p.a);
    double kappa = 1 + a;
    double h = a > 0 ? std::pow(a, -a) : std::pow(-a, -a);
    double x = std::pow(abs_z.to_double(), 2) / 4;
    double X = kappa * std::pow(h * x, 1 / kappa);
    return std::clamp(static_cast<int>(std::ceil(1.2 * X)) + 12, 16, 120);
}

void emit(const std::vector<ReportRow>& rows, const nlohmann::json& params, int precision, Format f)
{
    switch (f) {
    case Format::Json: std::cout << rows_to_json(rows, params, precision).dump(2) << '\n'; break;
    case Format::Csv: std::cout << rows_to_csv(rows); break;
    case Format::Text: std::cout << rows_to_text(rows); break;
    }
}

bool any_unstable(const std::vector<ReportRow>& rows)
{
    for (const auto& r : rows)
        for (const auto& c : r.components)
            if (c.truncation_unstable)
                return true;
    return false;
}

struct EvalArgs {
    std::string a, nu, z;
    bool asym = false;
    std::string trunc = "opt";
};

ReportRow run_eval(const EvalArgs& args, int P, bool& exhausted)
{
    const StruveParams p = StruveParams::parse(args.a, args.nu);
    const Complex z = parse_z(args.z, P);
    ReportRow r;
    r.table = "eval";
    r.params = "a=" + p.a.str() + " nu=" + p.nu.str();
    r.z = format_complex(z, 20);
    r.series_label = "L (series)";
    r.precision = P;

    EvalResult s;
    bool have_series = false;
    try {
        s = eval_series_escalating(z, p, P, {prec_cap(), 20});
        have_series = true;
        r.series_value = format_complex(s.value, 20);
        r.series_terms = s.terms_used;
        r.cancellation_digits = s.cancellation_digits;
        r.precision = s.precision_used;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PrecisionExhausted)
            throw;
        exhausted = true;
        r.warnings.push_back(e.what());
    }
    if (!args.asym)
        return r;

    const TruncationPolicy exp_tp = parse_trunc(args.trunc);
    const TruncationPolicy alg_tp = TruncationPolicy::optimal();
    const Real absz = ap::abs(z);
    AsymptoticEstimate e;
    if (p.kind() == ParamCase::PositiveA) {
        CoeffTable ct = solve_coeffs(p, coefficients_for(p, absz, exp_tp), P);
        e = assemble_pos(z, p, ct, exp_tp, alg_tp, P);
        r.asym_label = "asymptotic (a>0)";
    } else if (p.kind() == ParamCase::NegativeA) {
        if (z.im.is_zero()) {
            CoeffTable ct;
            if (-p.a < Rational(1, 2))
                ct = solve_coeffs(p, coefficients_for(p, absz, exp_tp), P);
            e = assemble_neg_real(z.re, p, ct, exp_tp, alg_tp, P);
        } else if (z.re.is_zero()) {
            e = assemble_neg_imag(ap::abs(z.im), p, alg_tp, P);
        } else {
            throw Error(ErrorKind::SectorUnsupported, "for a < 0 only real or imaginary z is covered");
        }
        r.asym_label = "asymptotic (a<0)";
    } else {
        throw Error(ErrorKind::DegenerateParameter, "no asymptotic expansion for a = 0");
    }
    r.asym_value = format_complex(e.value, 20);
    r.components = component_records(e, 20);
    for (const auto& w : e.warnings)
        r.warnings.push_back(w);
    r.warnings.push_back(std::string("regime: ") + to_string(e.regime.sector));
    if (have_series)
        r.matched_digits = matched_digits(s.value, e.value, P);
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Struve function: series, asymptotic expansions and reference tables"};
    app.require_subcommand(1);
    int P = 50;
    std::string format = "text";
    bool strict = false;
    app.add_option("--prec", P, "working precision in decimal digits")->check(CLI::Range(10, 5000));
    app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_flag("--strict", strict, "nonzero exit on unstable truncation or exhausted precision");

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate at one point");
    eval->add_option("--a", ev.a, "a > -1, decimal or p/q")->required();
    eval->add_option("--nu", ev.nu, "nu, decimal or p/q")->required();
    eval->add_option("--z", ev.z, "z as re, re,im or <r>i")->required();
    eval->add_flag("--asym", ev.asym, "also evaluate the large-|z| expansion");
    eval->add_option("--trunc", ev.trunc, "exponential series truncation: index j_max or 'opt'");

    int table_id = 0;
    bool serial = false;
    auto* table = app.add_subcommand("table", "reproduce a reference table");
    table->add_option("id", table_id, "table number 1-4")->required()->check(CLI::Range(1, 4));
    table->add_flag("--serial", serial, "compute rows one after another");

    std::string ca, cnu;
    int M = 11;
    bool rational = false;
    auto* coeffs = app.add_subcommand("coeffs", "coefficients c_j of the exponential expansion");
    coeffs->add_option("--a", ca, "a")->required();
    coeffs->add_option("--nu", cnu, "nu")->required();
    coeffs->add_option("--M", M, "number of coefficients c_0..c_{M-1}")->check(CLI::PositiveNumber);
    coeffs->add_flag("--rational", rational, "also print reconstructed rationals");

    std::string sigma_s, vnu = "1/3";
    int vM = 6;
    auto* verify = app.add_subcommand("verify-appendix", "compare 2Psi1 coefficients with the continued 1Psi2 ones");
    verify->add_option("--sigma", sigma_s, "sigma in (0,1)")->required();
    verify->add_option("--nu", vnu, "nu");
    verify->add_option("--M", vM, "coefficient count")->check(CLI::PositiveNumber);

    for (auto* sc : {eval, table, coeffs, verify}) {
        sc->add_option("--prec", P, "working precision in decimal digits")->check(CLI::Range(10, 5000));
        sc->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
        sc->add_flag("--strict", strict, "nonzero exit on unstable truncation or exhausted precision");
    }

    CLI11_PARSE(app, argc, argv);
    const Format fmt = parse_format(format);

    try {
        if (*eval) {
            bool exhausted = false;
            ReportRow row = run_eval(ev, P, exhausted);
            nlohmann::json params = {{"a", ev.a}, {"nu", ev.nu}, {"z", ev.z}};
            emit({row}, params, P, fmt);
            if (strict && (exhausted || any_unstable({row})))
                return 3;
        } else if (*table) {
            TableOptions opt;
            opt.digits = P;
            opt.prec_cap = prec_cap();
            opt.parallel = !serial;
            auto rows = build_table(table_id, opt);
            emit(rows, {{"table", table_id}}, P, fmt);
            if (strict && any_unstable(rows))
                return 3;
        } else if (*coeffs) {
            const StruveParams p = StruveParams::parse(ca, cnu);
            CoeffTable t = solve_coeffs(p, M, P);
            std::optional<ClosedFormC123> cf;
            if (p.a != 0)
                cf = closed_form_c123(p);
            const int reliable = std::min(P - 5, static_cast<int>(-ap::log10_abs(t.residual)) - 2);
            if (fmt == Format::Json) {
                nlohmann::json j = to_json(t);
                if (rational) {
                    auto& arr = j["rational"] = nlohmann::json::array();
                    for (const auto& c : t.c) {
                        auto q = reconstruct_rational(c, reliable);
                        arr.push_back(q ? q->str() : "");
                    }
                }
                if (cf)
                    j["closed_form"] = {cf->c1.str(), cf->c2.str(), cf->c3.str()};
                std::cout << j.dump(2) << '\n';
            } else {
                const char sep = fmt == Format::Csv ? ',' : ' ';
                std::cout << "j" << sep << "c_j" << (rational ? std::string(1, sep) + "rational" : "") << sep
                          << "closed_form_digits\n";
                for (int j = 0; j < t.M; ++j) {
                    std::cout << j << sep << t.c[j].to_string(std::min(P, 40));
                    if (rational) {
                        auto q = reconstruct_rational(t.c[j], reliable);
                        std::cout << sep << (q ? q->str() : "-");
                    }
                    std::cout << sep;
                    if (cf && j >= 1 && j <= 3) {
                        const Rational& ref = j == 1 ? cf->c1 : j == 2 ? cf->c2 : cf->c3;
                        std::cout << matched_digits(Real(ref, P), t.c[j], P);
                    }
                    std::cout << '\n';
                }
                if (fmt == Format::Text)
                    std::cout << "residual " << t.residual.to_string(3) << '\n';
            }
        } else if (*verify) {
            ContinuationReport r = verify_appendix_identity(parse_rational(sigma_s), parse_rational(vnu), vM, P);
            if (fmt == Format::Json) {
                nlohmann::json j;
                j["params"] = {{"sigma", r.sigma.str()}, {"nu", r.nu.str()}, {"M", r.M}};
                auto& rows = j["rows"] = nlohmann::json::array();
                for (int k = 0; k < r.M; ++k)
                    rows.push_back({{"j", k},
                                    {"direct", r.direct[k].to_string(30)},
                                    {"continued_re", r.continued_re[k].to_string(30)},
                                    {"continued_im", r.continued_im[k].to_string(3)}});
                j["max_discrepancy"] = r.max_discrepancy.to_string(3);
                j["meta"] = {{"precision", P}, {"version", version()}};
                std::cout << j.dump(2) << '\n';
            } else {
                const char sep = fmt == Format::Csv ? ',' : ' ';
                std::cout << "j" << sep << "direct" << sep << "continued" << sep << "continued_imag\n";
                for (int k = 0; k < r.M; ++k)
                    std::cout << k << sep << r.direct[k].to_string(30) << sep << r.continued_re[k].to_string(30)
                              << sep << r.continued_im[k].to_string(3) << '\n';
                std::cout << "max discrepancy " << r.max_discrepancy.to_string(3) << '\n';
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
