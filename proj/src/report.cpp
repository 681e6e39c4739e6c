#include "gstruve/report.hpp"

#include "gstruve/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace gstruve {

using ap::Complex;
using ap::Real;

std::string version()
{
    return "0.1.0";
}

PrintedValue parse_printed(const std::string& text)
{
    PrintedValue pv;
    pv.text = text;
    std::string s;
    for (char c : text)
        if (c != ' ')
            s += c;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        pv.negative = s[0] == '-';
        s.erase(0, 1);
    }
    int exp10 = 0;
    if (auto lp = s.find('('); lp != std::string::npos) {
        auto rp = s.find(')', lp);
        if (rp == std::string::npos)
            throw Error(ErrorKind::InvalidInput, "unbalanced exponent in '" + text + "'");
        exp10 = std::stoi(s.substr(lp + 1, rp - lp - 1));
        s = s.substr(0, lp);
    }
    if (!s.empty() && s.back() == '?') {
        pv.uncertain = true;
        s.pop_back();
    }
    auto dot = s.find('.');
    std::string int_part = dot == std::string::npos ? s : s.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
    std::string digits = int_part + frac_part;
    int lead = static_cast<int>(int_part.size()) - 1;
    size_t nz = digits.find_first_not_of('0');
    if (nz == std::string::npos)
        throw Error(ErrorKind::InvalidInput, "zero printed value '" + text + "'");
    lead -= static_cast<int>(nz);
    pv.mantissa_digits = digits.substr(nz);
    pv.exponent = exp10 + lead;
    return pv;
}

bool agrees_to_last_digit(const Real& x, const PrintedValue& pv)
{
    const int d = std::max(x.digits(), pv.significant() + 10);
    const long unit = static_cast<long>(pv.exponent) - (pv.significant() - 1);
    Real scaled = ap::round(x.at_digits(d) / ap::pow10(unit, d));
    Integer nc;
    mpfr_get_z(nc.backend().data(), scaled.raw(), MPFR_RNDN);
    Integer np(pv.mantissa_digits);
    if (pv.negative)
        np = -np;
    Integer diff = nc - np;
    return boost::multiprecision::abs(diff) <= 1;
}

int matched_digits(const Complex& a, const Complex& b, int cap)
{
    Real diff = ap::abs(a - b);
    Real ref = ap::abs(a);
    if (diff.is_zero())
        return cap;
    if (ref.is_zero())
        return 0;
    double m = std::floor(ap::log10_abs(ref) - ap::log10_abs(diff));
    return static_cast<int>(std::clamp(m, 0.0, static_cast<double>(cap)));
}

int matched_digits(const Real& a, const Real& b, int cap)
{
    return matched_digits(Complex(a), Complex(b), cap);
}

std::string format_complex(const Complex& z, int sig)
{
    if (z.im.is_zero())
        return z.re.to_string(sig);
    std::string im = z.im.to_string(sig);
    if (im[0] != '-')
        im = "+" + im;
    return z.re.to_string(sig) + im + "i";
}

std::vector<ComponentRecord> component_records(const AsymptoticEstimate& e, int sig)
{
    std::vector<ComponentRecord> out;
    for (const auto& c : e.components) {
        auto add = [&](const std::string& label, const Complex& v, int terms, const Real& err, bool unstable) {
            out.push_back({label, format_complex(v, sig), terms, err.to_string(3), to_string(c.role), unstable});
        };
        if (c.parts.empty()) {
            add(c.label, c.value, c.terms_used, c.error_estimate, c.truncation_unstable);
        } else {
            for (const auto& part : c.parts)
                add(part.label, part.value, part.terms_used, part.error_estimate, part.truncation_unstable);
        }
    }
    return out;
}

Format parse_format(const std::string& s)
{
    if (s == "text")
        return Format::Text;
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    throw Error(ErrorKind::InvalidInput, "unknown format '" + s + "'");
}

namespace {

// "15", "10i", "1.5e+00-2.0e+00i" -> (re, im)
std::pair<std::string, std::string> split_z(const std::string& z)
{
    if (z.empty() || z.back() != 'i')
        return {z, "0"};
    const std::string body = z.substr(0, z.size() - 1);
    for (size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
            return {body.substr(0, k), body.substr(body[k] == '+' ? k + 1 : k)};
    return {"0", body};
}

nlohmann::json row_json(const ReportRow& r)
{
    nlohmann::json j;
    j["table"] = r.table;
    j["group"] = r.group;
    j["params"] = r.params;
    auto [re, im] = split_z(r.z);
    j["z"] = {{"re", re}, {"im", im}};
    j["series_label"] = r.series_label;
    j["series_value"] = r.series_value;
    j["asym_label"] = r.asym_label;
    j["asym_value"] = r.asym_value;
    j["matched_digits"] = r.matched_digits;
    if (!r.published_series.empty())
        j["published_series"] = r.published_series;
    if (!r.published_asym.empty())
        j["published_asym"] = r.published_asym;
    if (r.series_agrees)
        j["series_agrees"] = *r.series_agrees;
    if (r.asym_agrees)
        j["asym_agrees"] = *r.asym_agrees;
    auto& comps = j["components"] = nlohmann::json::array();
    for (const auto& c : r.components)
        comps.push_back({{"label", c.label},
                         {"value", c.value},
                         {"terms_used", c.terms_used},
                         {"error_estimate", c.error_estimate},
                         {"role", c.role},
                         {"truncation_unstable", c.truncation_unstable}});
    j["warnings"] = r.warnings;
    j["precision"] = r.precision;
    j["series_terms"] = r.series_terms;
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string flag(const std::optional<bool>& b)
{
    if (!b)
        return "";
    return *b ? "yes" : "NO";
}

}  // namespace

nlohmann::json rows_to_json(const std::vector<ReportRow>& rows, const nlohmann::json& params, int precision)
{
    nlohmann::json j;
    j["params"] = params;
    auto& arr = j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back(row_json(r));
    j["meta"] = {{"precision", precision}, {"version", version()}};
    return j;
}

std::string rows_to_csv(const std::vector<ReportRow>& rows)
{
    std::ostringstream os;
    os << "table,group,params,z,series_label,series_value,published_series,series_agrees,"
          "asym_label,asym_value,published_asym,asym_agrees,matched_digits,warnings\n";
    for (const auto& r : rows) {
        std::string warn;
        for (const auto& w : r.warnings)
            warn += (warn.empty() ? "" : "; ") + w;
        os << csv_field(r.table) << ',' << csv_field(r.group) << ',' << csv_field(r.params) << ','
           << csv_field(r.z) << ',' << csv_field(r.series_label) << ',' << csv_field(r.series_value) << ','
           << csv_field(r.published_series) << ',' << flag(r.series_agrees) << ',' << csv_field(r.asym_label)
           << ',' << csv_field(r.asym_value) << ',' << csv_field(r.published_asym) << ',' << flag(r.asym_agrees)
           << ',' << r.matched_digits << ',' << csv_field(warn) << '\n';
    }
    return os.str();
}

std::string rows_to_text(const std::vector<ReportRow>& rows)
{
    std::ostringstream os;
    std::string last_group = "\x01";
    char buf[512];
    for (const auto& r : rows) {
        if (r.group != last_group) {
            os << (last_group == "\x01" ? "" : "\n") << "[table " << r.table << "] " << r.params
               << (r.group.empty() ? "" : "  (" + r.group + ")") << '\n';
            std::snprintf(buf, sizeof buf, "%-8s %-26s %-18s %-4s %-26s %-18s %-4s %s\n", "z",
                          r.series_label.c_str(), "printed", "ok", r.asym_label.c_str(), "printed", "ok", "digits");
            os << buf;
            last_group = r.group;
        }
        std::snprintf(buf, sizeof buf, "%-8s %-26s %-18s %-4s %-26s %-18s %-4s %d\n", r.z.c_str(),
                      r.series_value.c_str(), r.published_series.c_str(), flag(r.series_agrees).c_str(),
                      r.asym_value.c_str(), r.published_asym.c_str(), flag(r.asym_agrees).c_str(),
                      r.matched_digits);
        os << buf;
        for (const auto& c : r.components) {
            std::snprintf(buf, sizeof buf, "         %-20s %-28s terms=%-4d err=%-10s %s%s\n", c.label.c_str(),
                          c.value.c_str(), c.terms_used, c.error_estimate.c_str(), c.role.c_str(),
                          c.truncation_unstable ? " UNSTABLE" : "");
            os << buf;
        }
        for (const auto& w : r.warnings)
            os << "         warning: " << w << '\n';
    }
    return os.str();
}

}  // namespace gstruve
