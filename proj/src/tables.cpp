#include "gstruve/errors.hpp"
#include "gstruve/report.hpp"

#include <cmath>
#include <future>

namespace gstruve {

using ap::Complex;
using ap::Real;

namespace {

constexpr int kShown = 10;  // significant digits printed in table rows

template <class F>
std::vector<ReportRow> run_rows(size_t n, bool parallel, F f)
{
    std::vector<ReportRow> out(n);
    // MPFR keeps per-thread caches only when built thread-safe
    if (parallel && mpfr_buildopt_tls_p()) {
        std::vector<std::future<ReportRow>> fs;
        for (size_t i = 0; i < n; ++i)
            fs.push_back(std::async(std::launch::async, f, i));
        for (size_t i = 0; i < n; ++i)
            out[i] = fs[i].get();
    } else {
        for (size_t i = 0; i < n; ++i)
            out[i] = f(i);
    }
    return out;
}

struct Cell {
    const char* z;  // "8" or "6i"
    const char* series;
    const char* asym;
};

struct Block {
    const char* sigma;
    std::vector<Cell> cells;
};

std::string params_text(const StruveParams& p)
{
    return "a=" + p.a.str() + " nu=" + p.nu.str();
}

Real parse_modulus(const std::string& z, int d)
{
    std::string m = z;
    if (!m.empty() && m.back() == 'i')
        m.pop_back();
    return Real(m, d);
}

void compare_printed(ReportRow& row, const Real& series, const Real& asym)
{
    if (!row.published_series.empty())
        row.series_agrees = agrees_to_last_digit(series, parse_printed(row.published_series));
    if (!row.published_asym.empty())
        row.asym_agrees = agrees_to_last_digit(asym, parse_printed(row.published_asym));
}

// Coefficient count for the exponential expansion at the largest X of a block.
int coefficient_count(double X)
{
    return std::clamp(static_cast<int>(std::ceil(1.2 * X)) + 12, 16, 120);
}

}  // namespace

std::vector<ReportRow> build_table1(const TableOptions& opt)
{
    static const char* printed[] = {"-5/12",
                                    "-35/288",
                                    "-665/10368",
                                    "+9625/497664",
                                    "+1856855/5971968",
                                    "+606631025/429981696",
                                    "+27773871125/5159780352",
                                    "+8996211899675/495338913792",
                                    "+2459153764892825/53496602689536",
                                    "-22173972436540925/1283918464548864"};
    const StruveParams p(Rational(1, 2), Rational(1, 4));
    const int d = std::max(opt.digits, 60);
    CoeffTable ct = solve_coeffs(p, 11, d);
    int reliable = std::min(d - 5, static_cast<int>(-ap::log10_abs(ct.residual)) - 2);
    ClosedFormC123 cf = closed_form_c123(p);
    const Rational closed[] = {cf.c1, cf.c2, cf.c3};

    std::vector<ReportRow> rows;
    for (int j = 1; j <= 10; ++j) {
        ReportRow r;
        r.table = "1";
        r.params = params_text(p);
        r.z = "j=" + std::to_string(j);
        r.series_label = "c_j (fit)";
        r.asym_label = "c_j (rational)";
        r.series_value = ct.c[j].to_string(25);
        auto q = reconstruct_rational(ct.c[j], reliable);
        r.asym_value = q ? q->str() : "-";
        std::string pub = printed[j - 1];
        if (pub[0] == '+')
            pub.erase(0, 1);
        r.published_asym = pub;
        Rational pq = parse_rational(pub);
        r.asym_agrees = q && *q == pq;
        r.matched_digits = matched_digits(Real(pq, d), ct.c[j], d);
        if (j <= 3) {
            r.published_series = "closed form " + closed[j - 1].str();
            r.series_agrees = matched_digits(Real(closed[j - 1], d), ct.c[j], d) >= 20;
        }
        r.precision = d;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ReportRow> build_table2(const TableOptions& opt)
{
    static const std::vector<Cell> upper = {{"5", "+3.452097942(1)", "+3.461544352(1)"},
                                            {"10", "+1.226039040(5)", "+1.226039286(5)"},
                                            {"12", "+6.877617187(6)", "+6.877617204(6)"},
                                            {"15", "+5.182624938(9)", "+5.182624938(9)"}};
    static const std::vector<Cell> lower = {{"10i", "-4.572292174(-6)", "-4.57195324?(-6)"},
                                            {"15i", "+4.021530098(-10)", "+4.021543491(-10)"},
                                            {"20i", "+6.827666326(-12)", "+6.827666325(-12)"},
                                            {"25i", "+3.515426867(-15)", "+3.515426867(-15)"}};
    const StruveParams p(Rational(1, 2), Rational(1, 4));
    const int d = opt.digits;
    const CoeffTable ct = solve_coeffs(p, 12, d);  // c_11 only sizes the error estimate
    const auto exp_tp = TruncationPolicy::fixed(10);
    const auto alg_tp = TruncationPolicy::optimal();

    auto row = [&](size_t i) {
        const bool imag = i >= upper.size();
        const Cell& cell = imag ? lower[i - upper.size()] : upper[i];
        ReportRow r;
        r.table = "2";
        r.group = imag ? "z = i|z|" : "z > 0";
        r.params = params_text(p);
        r.z = cell.z;
        r.published_series = cell.series;
        r.published_asym = cell.asym;
        Real m = parse_modulus(cell.z, d);
        Complex z = imag ? Complex(Real(d), m) : Complex(m);
        // the imaginary-axis rows subtract an algebraic part of nearly equal size
        EvalResult s = eval_series_escalating(z, p, d, {opt.prec_cap, imag ? 30 : 20});
        AsymptoticEstimate e = assemble_pos(z, p, ct, exp_tp, alg_tp, d);
        r.components = component_records(e, kShown);
        r.warnings = e.warnings;
        r.precision = s.precision_used;
        r.series_terms = s.terms_used;
        r.cancellation_digits = s.cancellation_digits;
        Real sv = s.value.re, av = e.value.re;
        if (imag) {
            r.series_label = "L - H12";
            r.asym_label = "Etilde_1";
            const Component* h = nullptr;
            const Component* et = nullptr;
            for (const auto& c : e.components)
                (c.label == "H12" ? h : et) = &c;
            sv = s.value.re - h->value.re;
            av = et->value.re;
        } else {
            r.series_label = "L (series)";
            r.asym_label = "E12 (j<=10)";
        }
        r.series_value = sv.to_string(kShown);
        r.asym_value = av.to_string(kShown);
        r.matched_digits = matched_digits(sv, av, d);
        compare_printed(r, sv, av);
        return r;
    };
    return run_rows(upper.size() + lower.size(), opt.parallel, row);
}

std::vector<ReportRow> build_table3(const TableOptions& opt)
{
    static const std::vector<Block> blocks = {
        {"1/5", {{"8", "+1.371278215(4)", "+1.371994397(4)"},
                 {"10", "-1.628234940(7)", "-1.628235076(7)"},
                 {"15", "-2.287676991(22)", "-2.287676991(22)"}}},
        {"1/3", {{"5", "+4.994707877(1)", "+4.992261627(1)"},
                 {"8", "+5.127188845(2)", "+5.127188845(2)"},
                 {"10", "+1.563077837(3)", "+1.563077837(3)"}}},
        {"1/2", {{"3", "+4.705453951(0)", "+4.719691159(0)"},
                 {"5", "+1.918197617(1)", "+1.918197638(1)"},
                 {"8", "+8.747082153(1)", "+8.747082153(1)"}}},
        {"3/5", {{"3", "+4.075339511(0)", "+4.074935642(0)"},
                 {"4", "+7.439302510(0)", "+7.439299037(0)"},
                 {"5", "+1.276299496(1)", "+1.276299496(1)"}}},
    };
    const Rational nu(1, 3);
    const int d = opt.digits;

    std::vector<CoeffTable> tables(blocks.size());
    std::vector<std::pair<size_t, size_t>> index;
    for (size_t b = 0; b < blocks.size(); ++b) {
        const Rational sigma = parse_rational(blocks[b].sigma);
        const StruveParams p(-sigma, nu);
        if (sigma < Rational(1, 2)) {
            // largest X = kappa (h x)^{1/kappa} in the block
            double s = static_cast<double>(sigma), k = 1 - s;
            double zmax = std::stod(blocks[b].cells.back().z);
            double X = k * std::pow(std::pow(s, s) * zmax * zmax / 4, 1 / k);
            tables[b] = solve_coeffs(p, coefficient_count(X), d);
        }
        for (size_t c = 0; c < blocks[b].cells.size(); ++c)
            index.emplace_back(b, c);
    }
    const auto tp = TruncationPolicy::optimal();

    auto row = [&](size_t i) {
        auto [b, c] = index[i];
        const Cell& cell = blocks[b].cells[c];
        const StruveParams p(-parse_rational(blocks[b].sigma), nu);
        ReportRow r;
        r.table = "3";
        r.group = std::string("sigma=") + blocks[b].sigma;
        r.params = params_text(p);
        r.z = cell.z;
        r.series_label = "L (series)";
        r.asym_label = "asymptotic";
        r.published_series = cell.series;
        r.published_asym = cell.asym;
        Real z(cell.z, d);
        EvalResult s = eval_series_escalating(Complex(z), p, d, {opt.prec_cap, 20});
        AsymptoticEstimate e = assemble_neg_real(z, p, tables[b], tp, tp, d);
        r.components = component_records(e, kShown);
        r.warnings = e.warnings;
        r.precision = s.precision_used;
        r.series_terms = s.terms_used;
        r.cancellation_digits = s.cancellation_digits;
        r.series_value = s.value.re.to_string(kShown);
        r.asym_value = e.value.re.to_string(kShown);
        r.matched_digits = matched_digits(s.value.re, e.value.re, d);
        compare_printed(r, s.value.re, e.value.re);
        return r;
    };
    return run_rows(index.size(), opt.parallel, row);
}

std::vector<ReportRow> build_table4(const TableOptions& opt)
{
    static const std::vector<Block> blocks = {
        {"1/4", {{"6i", "3.044656205(-2)", "3.044653596(-2)"}, {"8i", "1.673275565(-2)", "1.673275565(-2)"}}},
        {"1/3", {{"6i", "2.792844201(-2)", "2.792844405(-2)"}, {"8i", "1.539185802(-2)", "1.539185802(-2)"}}},
        {"1/2", {{"4i", "5.552864403(-2)", "5.553062223(-2)"}, {"5i", "3.420993477(-2)", "3.420993479(-2)"}}},
        {"3/4", {{"3i", "7.704243224(-2)", "7.704358006(-2)"}, {"4i", "4.087728092(-2)", "4.087728092(-2)"}}},
    };
    const Rational nu(4, 3);
    const int d = opt.digits;
    std::vector<std::pair<size_t, size_t>> index;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (size_t c = 0; c < blocks[b].cells.size(); ++c)
            index.emplace_back(b, c);
    const auto tp = TruncationPolicy::optimal();

    auto row = [&](size_t i) {
        auto [b, c] = index[i];
        const Cell& cell = blocks[b].cells[c];
        const StruveParams p(-parse_rational(blocks[b].sigma), nu);
        ReportRow r;
        r.table = "4";
        r.group = std::string("sigma=") + blocks[b].sigma;
        r.params = params_text(p);
        r.z = cell.z;
        r.series_label = "L (series)";
        r.asym_label = "algebraic";
        r.published_series = cell.series;
        r.published_asym = cell.asym;
        Real m = parse_modulus(cell.z, d);
        EvalResult s = eval_series_escalating(Complex(Real(d), m), p, d, {opt.prec_cap, 20});
        AsymptoticEstimate e = assemble_neg_imag(m, p, tp, d);
        r.components = component_records(e, kShown);
        r.warnings = e.warnings;
        r.precision = s.precision_used;
        r.series_terms = s.terms_used;
        r.cancellation_digits = s.cancellation_digits;
        r.series_value = s.value.re.to_string(kShown);
        r.asym_value = e.value.re.to_string(kShown);
        r.matched_digits = matched_digits(s.value.re, e.value.re, d);
        compare_printed(r, s.value.re, e.value.re);
        return r;
    };
    return run_rows(index.size(), opt.parallel, row);
}

std::vector<ReportRow> build_table(int id, const TableOptions& opt)
{
    switch (id) {
    case 1: return build_table1(opt);
    case 2: return build_table2(opt);
    case 3: return build_table3(opt);
    case 4: return build_table4(opt);
    }
    throw Error(ErrorKind::InvalidInput, "no table " + std::to_string(id));
}

}  // namespace gstruve
