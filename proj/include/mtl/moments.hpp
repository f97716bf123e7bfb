#pragma once

// Empirical distributions and the moment–tail inequality: for a non-negative
// ξ with Eξ = 1 and Eξ² = a > 1, the maximum of ξ is at least a, and for every
// b < a the tail second moment E[ξ²; ξ > b] is at least a − b.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtl/summation.hpp"

namespace mtl {

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kInequalityTolerance = 1e-9;

/// Raised when a distribution has zero mean and cannot be normalized.
class DegenerateDistribution : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a (first, second) moment pair violates m2 >= m1^2.
class InconsistentMoments : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct WeightedValue {
    double value = 0.0;
    double weight = 0.0;
};

/// Finite weighted set of non-negative reals. Immutable once built.
class EmpiricalDistribution {
public:
    /// Throws std::invalid_argument unless the entries are non-empty, every
    /// value is finite and >= 0 and every weight is finite and > 0.
    explicit EmpiricalDistribution(std::vector<WeightedValue> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("distribution needs at least one entry");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (!std::isfinite(e.value) || e.value < 0.0)
                throw std::invalid_argument("entry " + std::to_string(i) + ": value must be finite and >= 0");
            if (!std::isfinite(e.weight) || e.weight <= 0.0)
                throw std::invalid_argument("entry " + std::to_string(i) + ": weight must be finite and > 0");
        }
        normalized_ = std::abs(total_weight() - 1.0) <= kNormalizationTolerance &&
                      std::abs(weighted_sum(1) - 1.0) <= kNormalizationTolerance;
    }

    /// Equal weights over the given values.
    [[nodiscard]] static EmpiricalDistribution uniform(std::span<const double> values) {
        std::vector<WeightedValue> entries;
        entries.reserve(values.size());
        for (double v : values) entries.push_back({v, 1.0});
        return EmpiricalDistribution(std::move(entries));
    }

    [[nodiscard]] std::span<const WeightedValue> entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool normalized() const noexcept { return normalized_; }

    [[nodiscard]] double total_weight() const {
        CompensatedSum s;
        for (const auto& e : entries_) s += e.weight;
        return s.value();
    }

    [[nodiscard]] double max_value() const noexcept {
        double m = 0.0;
        for (const auto& e : entries_) m = std::max(m, e.value);
        return m;
    }

    [[nodiscard]] double min_value() const noexcept {
        double m = entries_.front().value;
        for (const auto& e : entries_) m = std::min(m, e.value);
        return m;
    }

    /// Σ w v^k, unnormalized.
    [[nodiscard]] double weighted_sum(unsigned k) const {
        CompensatedSum s;
        for (const auto& e : entries_) s += e.weight * power(e.value, k);
        return s.value();
    }

private:
    static double power(double v, unsigned k) noexcept {
        double r = 1.0;
        for (unsigned i = 0; i < k; ++i) r *= v;
        return r;
    }

    std::vector<WeightedValue> entries_;
    bool normalized_ = false;
};

/// k-th moment Σ w v^k / Σ w.
[[nodiscard]] inline double moment(const EmpiricalDistribution& dist, unsigned k) {
    if (k == 0) throw std::invalid_argument("moment order must be positive");
    return dist.weighted_sum(k) / dist.total_weight();
}

/// Rescales weights to sum 1 and values by the reciprocal mean.
[[nodiscard]] inline EmpiricalDistribution normalize(const EmpiricalDistribution& dist) {
    const double total = dist.total_weight();
    const double mean = dist.weighted_sum(1) / total;
    if (!(mean > 0.0)) throw DegenerateDistribution("distribution has zero mean; cannot normalize");

    std::vector<WeightedValue> scaled;
    scaled.reserve(dist.size());
    for (const auto& e : dist.entries()) scaled.push_back({e.value / mean, e.weight / total});
    return EmpiricalDistribution(std::move(scaled));
}

/// Σ_{v > b} w v² / Σ w. The threshold is strict: atoms sitting exactly at b
/// are excluded.
[[nodiscard]] inline double tail_second_moment(const EmpiricalDistribution& dist, double b) {
    CompensatedSum s;
    for (const auto& e : dist.entries())
        if (e.value > b) s += e.weight * e.value * e.value;
    return s.value() / dist.total_weight();
}

struct TailCheck {
    double b = 0.0;
    double tail = 0.0;
    double bound = 0.0;  // a - b
    bool holds = true;
};

struct TheoremReport {
    double a = 0.0;
    double max_value = 0.0;
    bool degenerate = false;
    bool max_holds = true;  // max_value >= a - tol (only meaningful when a > 1)
    std::vector<TailCheck> checks;

    [[nodiscard]] bool all_hold() const noexcept {
        return max_holds && std::all_of(checks.begin(), checks.end(), [](const TailCheck& c) { return c.holds; });
    }
};

/// Normalizes `dist` and checks both halves of the inequality on it. Grid
/// points with b >= a carry a non-positive bound and hold trivially.
[[nodiscard]] inline TheoremReport verify_theorem(const EmpiricalDistribution& dist, std::span<const double> b_grid) {
    const EmpiricalDistribution unit = normalize(dist);
    TheoremReport report;
    report.a = moment(unit, 2);
    report.max_value = unit.max_value();
    report.degenerate = report.a <= 1.0 + kNormalizationTolerance;
    if (!report.degenerate) report.max_holds = report.max_value >= report.a - kInequalityTolerance;

    report.checks.reserve(b_grid.size());
    for (double b : b_grid) {
        TailCheck c;
        c.b = b;
        c.tail = tail_second_moment(unit, b);
        c.bound = report.a - b;
        c.holds = c.tail >= c.bound - kInequalityTolerance;
        report.checks.push_back(c);
    }
    return report;
}

/// `points` evenly spaced thresholds in [0, a).
[[nodiscard]] inline std::vector<double> default_b_grid(double a, std::size_t points = 20) {
    std::vector<double> grid;
    grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i) grid.push_back(a * static_cast<double>(i) / static_cast<double>(points));
    return grid;
}

/// Existence bound max ≥ m2/m1 for a non-negative variable with moments m1, m2.
[[nodiscard]] inline double max_lower_bound(double m1, double m2) {
    if (!(m1 > 0.0)) throw std::invalid_argument("first moment must be positive");
    if (m2 < m1 * m1 * (1.0 - kNormalizationTolerance))
        throw InconsistentMoments("second moment is smaller than the squared first moment");
    return m2 / m1;
}

}  // namespace mtl
