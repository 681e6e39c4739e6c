#pragma once

#include "gstruve/asym.hpp"
#include "gstruve/coeffs.hpp"
#include "gstruve/series.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gstruve {

// A value as printed in a reference table, e.g. "+3.452097942(1)" meaning
// 3.452097942e1. A trailing '?' marks an unreadable digit; the comparison then
// uses the digits before it.
struct PrintedValue {
    std::string text;
    std::string mantissa_digits;  // significant digits without sign or point
    int exponent = 0;             // power of ten of the leading digit
    bool negative = false;
    bool uncertain = false;
    int significant() const { return static_cast<int>(mantissa_digits.size()); }
};

PrintedValue parse_printed(const std::string& text);

// Rounds `x` to the printed number of significant digits and checks that the
// last digit differs by at most one unit.
bool agrees_to_last_digit(const ap::Real& x, const PrintedValue& printed);

// floor(-log10(|a - b| / |a|)), clamped to [0, cap].
int matched_digits(const ap::Complex& a, const ap::Complex& b, int cap);
int matched_digits(const ap::Real& a, const ap::Real& b, int cap);

struct ComponentRecord {
    std::string label;
    std::string value;
    int terms_used = 0;
    std::string error_estimate;
    std::string role;
    bool truncation_unstable = false;
};

struct ReportRow {
    std::string table;   // "1".."4" or "eval"
    std::string group;   // parameter block within a table
    std::string params;  // "a=1/2 nu=1/4"
    std::string z;       // "10", "20i", "3+4i"
    std::string series_label;
    std::string asym_label;
    std::string series_value;  // decimal, 10 significant digits for table rows
    std::string asym_value;
    int matched_digits = 0;  // between the series and asymptotic columns
    std::string published_series;
    std::string published_asym;
    std::optional<bool> series_agrees;  // against the printed value
    std::optional<bool> asym_agrees;
    std::vector<ComponentRecord> components;
    std::vector<std::string> warnings;
    int precision = 0;
    int series_terms = 0;
    double cancellation_digits = 0;
};

struct TableOptions {
    int digits = 50;
    int prec_cap = 400;
    bool parallel = true;
};

std::vector<ReportRow> build_table1(const TableOptions& opt);
std::vector<ReportRow> build_table2(const TableOptions& opt);
std::vector<ReportRow> build_table3(const TableOptions& opt);
std::vector<ReportRow> build_table4(const TableOptions& opt);
std::vector<ReportRow> build_table(int id, const TableOptions& opt);

std::vector<ComponentRecord> component_records(const AsymptoticEstimate& e, int sig);

// Complex numbers print as "re" when the imaginary part is zero, else "re+imi".
std::string format_complex(const ap::Complex& z, int sig);

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& s);

std::string version();

nlohmann::json rows_to_json(const std::vector<ReportRow>& rows, const nlohmann::json& params, int precision);
std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::string rows_to_text(const std::vector<ReportRow>& rows);

}  // namespace gstruve
