#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mtl/summation.hpp"

namespace mtl {

using BigInt = boost::multiprecision::cpp_int;

[[nodiscard]] inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Natural log of |x|, finite for any nonzero magnitude; -inf for zero.
[[nodiscard]] inline double log_abs(const BigInt& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    const BigInt mag = boost::multiprecision::abs(x);
    const std::size_t bits = boost::multiprecision::msb(mag) + 1;
    if (bits <= 1000) return std::log(mag.convert_to<double>());
    const std::size_t shift = bits - 64;
    const double head = static_cast<BigInt>(mag >> shift).convert_to<double>();
    return std::log(head) + static_cast<double>(shift) * std::log(2.0);
}

[[nodiscard]] inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

/// log n! as a compensated sum of log k.
[[nodiscard]] inline double log_factorial(unsigned n) {
    CompensatedSum s;
    for (unsigned k = 2; k <= n; ++k) s += std::log(static_cast<double>(k));
    return s.value();
}

/// A positive quantity kept in log space, with its plain value when that is
/// representable as a finite double.
struct LogReal {
    double log = 0.0;
    std::optional<double> value;

    [[nodiscard]] static LogReal from_log(double log_value) {
        LogReal r{log_value, std::nullopt};
        const double v = std::exp(log_value);
        if (std::isfinite(v) && (v > 0.0 || std::isinf(log_value))) r.value = v;
        return r;
    }
};

}  // namespace mtl
