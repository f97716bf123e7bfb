#pragma once

// `value,weight` CSV ingestion for empirical distributions.

#include <charconv>
#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mtl/moments.hpp"

namespace mtl {

class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_field(std::string_view field, std::size_t line, const char* name) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw CsvError(line, std::string("malformed ") + name + " '" + std::string(field) + "'");
    return out;
}

}  // namespace detail

/// Reads a header line `value,weight` followed by one entry per row. Blank
/// lines are skipped. Errors carry the 1-based line number.
[[nodiscard]] inline EmpiricalDistribution read_distribution_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::vector<WeightedValue> entries;

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = detail::trim(line);
        if (lineno == 1 && row.starts_with("\xEF\xBB\xBF")) row.remove_prefix(3);
        if (row.empty()) continue;

        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
            throw CsvError(lineno, "expected exactly two comma-separated fields");

        if (!have_header) {
            if (detail::trim(row.substr(0, comma)) != "value" || detail::trim(row.substr(comma + 1)) != "weight")
                throw CsvError(lineno, "expected header 'value,weight'");
            have_header = true;
            continue;
        }

        const double value = detail::parse_field(row.substr(0, comma), lineno, "value");
        const double weight = detail::parse_field(row.substr(comma + 1), lineno, "weight");
        if (!std::isfinite(value) || value < 0.0) throw CsvError(lineno, "value must be finite and >= 0");
        if (!std::isfinite(weight) || weight <= 0.0) throw CsvError(lineno, "weight must be finite and > 0");
        entries.push_back({value, weight});
    }

    if (!have_header) throw CsvError(lineno == 0 ? 1 : lineno, "missing header 'value,weight'");
    if (entries.empty()) throw CsvError(lineno, "no entries after header");
    return EmpiricalDistribution(std::move(entries));
}

}  // namespace mtl
