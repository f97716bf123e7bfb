#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace mtl {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Pairwise (tree) summation. The reduction order depends only on the length
/// of the input, so results are reproducible however the values were produced.
[[nodiscard]] inline double pairwise_sum(std::span<const double> xs) noexcept {
    constexpr std::size_t kLeaf = 32;
    if (xs.size() <= kLeaf) {
        CompensatedSum s;
        for (double x : xs) s += x;
        return s.value();
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace mtl
