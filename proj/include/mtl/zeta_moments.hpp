#pragma once

// Quadrature moments of |ζ(½ + it)| over [T, T + H] and the large-value
// construction built on the moment–tail inequality.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mtl/moments.hpp"
#include "mtl/parallel.hpp"
#include "mtl/summation.hpp"
#include "mtl/zeta.hpp"

namespace mtl::zeta {

inline constexpr double kDefaultStep = 0.05;
inline constexpr double kCoarseStepWarning = 0.25;
inline constexpr double kConvergenceTolerance = 0.005;

/// Coefficient c in |ζ| > c·log^{3/2}T, taken as 1/(4π²).
inline constexpr double kThresholdInvFourPiSq = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
/// Coefficient implied by b = log²T/(4π²) together with mean |ζ|² ≈ log T.
inline constexpr double kThresholdInvTwoPi = 1.0 / (2.0 * std::numbers::pi);

struct MomentEstimate {
    double T = 0.0;
    double H = 0.0;
    int k = 2;
    double value = 0.0;
    std::size_t nodes = 0;
    double step = 0.0;
    double refined_value = 0.0;    // same rule at half the step
    double relative_change = 0.0;  // |refined − value| / refined
    bool converged = false;        // relative_change < 0.5%
    bool coarse_step_warning = false;
};

namespace detail {

inline std::size_t simpson_intervals(double H, double step) {
    auto n = static_cast<std::size_t>(std::ceil(H / step * (1.0 - 1e-12)));
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
    return n;
}

/// |ζ| at T + H·i/intervals for i = 0..intervals. Node positions depend only
/// on the index, so coarser grids reuse exactly the same samples.
inline std::vector<double> sample_abs_zeta(double T, double H, std::size_t intervals, const ZetaEvalConfig& cfg,
                                           std::size_t threads) {
    constexpr std::size_t kChunk = 512;
    std::vector<double> out(intervals + 1);
    const double di = static_cast<double>(intervals);
    parallel::for_each_chunk(parallel::chunk_count(out.size(), kChunk), threads, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(out.size(), lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) out[i] = zeta_abs(T + H * (static_cast<double>(i) / di), cfg);
    });
    return out;
}

inline double simpson_weight(std::size_t i, std::size_t intervals) noexcept {
    if (i == 0 || i == intervals) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
}

/// Composite Simpson of f^power over every `stride`-th sample.
inline double simpson(const std::vector<double>& samples, std::size_t stride, double H, int power) {
    const std::size_t intervals = (samples.size() - 1) / stride;
    std::vector<double> terms(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double f = samples[i * stride];
        terms[i] = simpson_weight(i, intervals) * std::pow(f, power);
    }
    const double h = H / static_cast<double>(intervals);
    return pairwise_sum(terms) * h / 3.0;
}

inline void check_interval(double T, double H, double step) {
    if (!(T >= 0.0) || !std::isfinite(T)) throw std::invalid_argument("T must be finite and >= 0");
    if (!(H > 0.0) || !std::isfinite(H)) throw std::invalid_argument("H must be positive");
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    if (step > H / 10.0) throw std::invalid_argument("step must be at most H/10");
}

}  // namespace detail

/// Composite Simpson estimate of ∫_T^{T+H} |ζ(½+it)|^k dt, k ∈ {2, 4}. The
/// requested step is shrunk so the interval count is even; a half-step
/// estimate is always computed alongside as a convergence check.
[[nodiscard]] inline MomentEstimate moment_integral(double T, double H, int k, double step = kDefaultStep,
                                                    const ZetaEvalConfig& cfg = {}, std::size_t threads = 0) {
    detail::check_interval(T, H, step);
    if (k != 2 && k != 4) throw std::invalid_argument("k must be 2 or 4");

    const std::size_t intervals = detail::simpson_intervals(H, step);
    const auto fine = detail::sample_abs_zeta(T, H, 2 * intervals, cfg, threads);

    MomentEstimate est;
    est.T = T;
    est.H = H;
    est.k = k;
    est.nodes = intervals + 1;
    est.step = H / static_cast<double>(intervals);
    est.value = detail::simpson(fine, 2, H, k);
    est.refined_value = detail::simpson(fine, 1, H, k);
    est.relative_change = est.refined_value > 0.0 ? std::abs(est.refined_value - est.value) / est.refined_value : 0.0;
    est.converged = est.relative_change < kConvergenceTolerance;
    est.coarse_step_warning = est.step > kCoarseStepWarning;
    return est;
}

/// Main term of the mean square: T log(T/2π) + (2γ − 1) T.
[[nodiscard]] inline double ingham_main(double T) {
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
    return T * std::log(T / (2.0 * std::numbers::pi)) + (2.0 * kEulerGamma - 1.0) * T;
}

/// Leading term T log⁴T / (2π²) of the fourth-moment polynomial. A
/// leading-order comparator only; the lower-order coefficients are not known
/// here.
[[nodiscard]] inline double im_leading(double T) {
    if (!(T > 1.0)) throw std::invalid_argument("T must exceed 1");
    const double l = std::log(T);
    return T * l * l * l * l / (2.0 * std::numbers::pi * std::numbers::pi);
}

struct RestrictedFourthMoment {
    double coefficient = 0.0;
    double threshold = 0.0;  // coefficient · log^{3/2} T
    double restricted_fourth = 0.0;
    double measure_of_set = 0.0;
};

struct TailMomentReport {
    double T = 0.0;
    double H = 0.0;
    double step = 0.0;
    std::size_t nodes = 0;

    double threshold_coefficient = 0.0;
    double threshold = 0.0;
    double restricted_fourth = 0.0;
    double measure_of_set = 0.0;
    RestrictedFourthMoment at_inv_four_pi_sq;
    RestrictedFourthMoment at_inv_two_pi;

    double second_moment = 0.0;  // ∫|ζ|² over the window
    double fourth_moment = 0.0;  // ∫|ζ|⁴ over the window
    double e_xi = 0.0;
    double a = 0.0;
    double b = 0.0;
    double tail = 0.0;
    double bound = 0.0;  // a − b
    bool holds = false;
    bool degenerate = false;
    double xi_cutoff = 0.0;  // |ζ| level equivalent to ξ > b

    double corollary_main_term = 0.0;  // T log⁴T / (4π²)
    double main_term_ratio = 0.0;      // restricted_fourth / corollary_main_term
    bool h_exceeds_t_two_thirds = false;
};

/// Discretizes ξ = H|ζ(½+it)|² / ∫_T^{T+H}|ζ|² on the Simpson nodes (weights
/// normalized by H, so Eξ = 1 up to rounding), takes b = log²T/(4π²) and
/// checks the tail inequality on that finite distribution. Restricted fourth
/// moments are reported for `c_threshold` and for both candidate
/// coefficients.
[[nodiscard]] inline TailMomentReport corollary1_report(double T, double H, double c_threshold = kThresholdInvFourPiSq,
                                                        double step = kDefaultStep, const ZetaEvalConfig& cfg = {},
                                                        std::size_t threads = 0) {
    if (!(T >= 10.0)) throw std::invalid_argument("T must be >= 10");
    detail::check_interval(T, H, step);
    if (!(c_threshold > 0.0)) throw std::invalid_argument("c_threshold must be positive");

    const std::size_t intervals = detail::simpson_intervals(H, step);
    const auto z = detail::sample_abs_zeta(T, H, intervals, cfg, threads);
    const double h = H / static_cast<double>(intervals);

    std::vector<double> w(z.size());
    std::vector<double> second(z.size());
    std::vector<double> fourth(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        w[i] = detail::simpson_weight(i, intervals) * h / 3.0;
        const double z2 = z[i] * z[i];
        second[i] = w[i] * z2;
        fourth[i] = w[i] * z2 * z2;
    }

    TailMomentReport r;
    r.T = T;
    r.H = H;
    r.step = h;
    r.nodes = z.size();
    r.second_moment = pairwise_sum(second);
    r.fourth_moment = pairwise_sum(fourth);

    std::vector<WeightedValue> entries(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) entries[i] = {H * z[i] * z[i] / r.second_moment, w[i] / H};
    const EmpiricalDistribution xi(std::move(entries));
    r.e_xi = moment(xi, 1);

    const double log_t = std::log(T);
    r.b = log_t * log_t / (4.0 * std::numbers::pi * std::numbers::pi);
    const double grid[] = {r.b};
    const TheoremReport check = verify_theorem(xi, grid);
    r.a = check.a;
    r.degenerate = check.degenerate;
    r.tail = check.checks.front().tail;
    r.bound = check.checks.front().bound;
    r.holds = check.checks.front().holds;
    r.xi_cutoff = std::sqrt(r.b * r.second_moment / H);

    auto restricted = [&](double coefficient) {
        RestrictedFourthMoment m;
        m.coefficient = coefficient;
        m.threshold = coefficient * std::pow(log_t, 1.5);
        std::vector<double> mass;
        std::vector<double> quartic;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i] > m.threshold) {
                mass.push_back(w[i]);
                quartic.push_back(fourth[i]);
            }
        }
        m.measure_of_set = pairwise_sum(mass);
        m.restricted_fourth = pairwise_sum(quartic);
        return m;
    };
    const RestrictedFourthMoment chosen = restricted(c_threshold);
    r.threshold_coefficient = chosen.coefficient;
    r.threshold = chosen.threshold;
    r.restricted_fourth = chosen.restricted_fourth;
    r.measure_of_set = chosen.measure_of_set;
    r.at_inv_four_pi_sq = restricted(kThresholdInvFourPiSq);
    r.at_inv_two_pi = restricted(kThresholdInvTwoPi);

    r.corollary_main_term = T * std::pow(log_t, 4) / (4.0 * std::numbers::pi * std::numbers::pi);
    r.main_term_ratio = r.restricted_fourth / r.corollary_main_term;
    r.h_exceeds_t_two_thirds = H >= std::pow(T, 2.0 / 3.0);
    return r;
}

}  // namespace mtl::zeta
