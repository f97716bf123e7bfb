#pragma once

// |ζ(½ + it)| on the critical line. Small t uses Euler–Maclaurin summation,
// large t the Riemann–Siegel formula with Stirling-series theta.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mtl/summation.hpp"

namespace mtl::zeta {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr int kMaxEulerMaclaurinTerms = 15;

/// Evaluation strategy for zeta_abs.
class ZetaEvalConfig {
public:
    ZetaEvalConfig() = default;

    /// rs_correction_terms is the highest Riemann–Siegel coefficient used
    /// (0: C0, 1: C0..C1, 2: C0..C2). em_terms == 0 selects the adaptive
    /// Euler–Maclaurin truncation.
    ZetaEvalConfig(double t_switch, int rs_correction_terms, int em_terms = 0)
        : t_switch_(t_switch), rs_correction_terms_(rs_correction_terms), em_terms_(em_terms) {
        if (!(t_switch > 0.0) || !std::isfinite(t_switch)) throw std::invalid_argument("t_switch must be positive");
        if (rs_correction_terms < 0 || rs_correction_terms > 2)
            throw std::invalid_argument("rs_correction_terms must be 0, 1 or 2");
        if (em_terms < 0 || em_terms > kMaxEulerMaclaurinTerms)
            throw std::invalid_argument("em_terms must be in [0, 15]");
    }

    [[nodiscard]] double t_switch() const noexcept { return t_switch_; }
    [[nodiscard]] int rs_correction_terms() const noexcept { return rs_correction_terms_; }
    [[nodiscard]] int em_terms() const noexcept { return em_terms_; }

private:
    double t_switch_ = 50.0;
    int rs_correction_terms_ = 1;
    int em_terms_ = 0;
};

namespace detail {

// B_{2k} for k = 1..15.
inline constexpr std::array<std::array<double, 2>, kMaxEulerMaclaurinTerms> kBernoulli{{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

/// B_{2k} / (2k)! for k = 1..15.
inline const std::array<double, kMaxEulerMaclaurinTerms>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<double, kMaxEulerMaclaurinTerms> out{};
        long double fact = 1.0L;
        for (int k = 1; k <= kMaxEulerMaclaurinTerms; ++k) {
            fact *= static_cast<long double>(2 * k - 1) * static_cast<long double>(2 * k);
            const auto& [num, den] = kBernoulli[static_cast<std::size_t>(k - 1)];
            out[static_cast<std::size_t>(k - 1)] =
                static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den) / fact);
        }
        return out;
    }();
    return table;
}

/// Power-series coefficients (in z = 1 − 2p, p the fractional part of
/// √(t/2π)) of the Riemann–Siegel remainder functions C0, C1, C2.
///
/// C0 = Ψ with Ψ(z) = −cos(πz²/2 − 5π/8) / cos(πz), an entire function. In
/// terms of p-derivatives, C1 = −Ψ'''/(96π²) and C2 = Ψ''/(64π²) +
/// Ψ⁽⁶⁾/(18432π⁴); with d/dp = −2 d/dz these become the z-forms below. The
/// series quotient amplifies rounding by roughly 4^k at z^{2k}, so it is
/// formed in 50-digit arithmetic.
struct RiemannSiegelCoefficients {
    std::array<std::vector<double>, 3> c;
};

inline const RiemannSiegelCoefficients& riemann_siegel_coefficients() {
    static const RiemannSiegelCoefficients coeffs = [] {
        using Real = boost::multiprecision::cpp_bin_float_50;
        constexpr std::size_t kTerms = 80;
        const Real pi = boost::math::constants::pi<Real>();
        const Real c5 = cos(5 * pi / 8);
        const Real s5 = sin(5 * pi / 8);

        std::vector<Real> num(kTerms, Real(0));
        std::vector<Real> den(kTerms, Real(0));
        // cos(a − 5π/8) = cos a·cos(5π/8) + sin a·sin(5π/8) with a = πz²/2.
        Real half_pi_pow = 1;  // (π/2)^j
        Real fact = 1;         // j!
        for (std::size_t j = 0; 2 * j < kTerms; ++j) {
            if (j > 0) {
                half_pi_pow *= pi / 2;
                fact *= static_cast<unsigned>(j);
            }
            const Real term = half_pi_pow / fact;
            const int sign = (j / 2) % 2 == 0 ? 1 : -1;
            num[2 * j] += sign * term * (j % 2 == 0 ? c5 : s5);
        }
        Real pi_pow = 1;
        fact = 1;
        for (std::size_t j = 0; j < kTerms; ++j) {
            if (j > 0) {
                pi_pow *= pi;
                fact *= static_cast<unsigned>(j);
            }
            if (j % 2 == 0) den[j] = -(((j / 2) % 2 == 0) ? 1 : -1) * pi_pow / fact;
        }
        std::vector<Real> psi(kTerms, Real(0));
        for (std::size_t i = 0; i < kTerms; ++i) {
            Real acc = num[i];
            for (std::size_t j = 1; j <= i; ++j) acc -= den[j] * psi[i - j];
            psi[i] = acc / den[0];
        }

        auto derivative = [](std::vector<Real> c, int order) {
            for (int d = 0; d < order; ++d) {
                for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = c[i + 1] * static_cast<unsigned>(i + 1);
                c.back() = 0;
            }
            return c;
        };
        const auto d2 = derivative(psi, 2);
        const auto d3 = derivative(psi, 3);
        const auto d6 = derivative(psi, 6);
        const Real pi2 = pi * pi;

        constexpr std::size_t kKept = 64;
        RiemannSiegelCoefficients out;
        for (auto& v : out.c) v.resize(kKept);
        for (std::size_t i = 0; i < kKept; ++i) {
            out.c[0][i] = static_cast<double>(psi[i]);
            out.c[1][i] = static_cast<double>(d3[i] / (12 * pi2));
            out.c[2][i] = static_cast<double>(d2[i] / (16 * pi2) + d6[i] / (288 * pi2 * pi2));
        }
        return out;
    }();
    return coeffs;
}

inline double horner(const std::vector<double>& c, double z) noexcept {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace detail

/// Riemann–Siegel remainder coefficient C_k at z = 1 − 2p, k ∈ {0, 1, 2}.
[[nodiscard]] inline double riemann_siegel_coefficient(int k, double z) {
    if (k < 0 || k > 2) throw std::invalid_argument("coefficient index must be 0, 1 or 2");
    return detail::horner(detail::riemann_siegel_coefficients().c[static_cast<std::size_t>(k)], z);
}

/// θ(t) from the Stirling series of log Γ(¼ + it/2).
[[nodiscard]] inline double riemann_siegel_theta(double t) noexcept {
    constexpr double pi = std::numbers::pi;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return t / 2.0 * std::log(t / (2.0 * pi)) - t / 2.0 - pi / 8.0 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t3) +
           31.0 / (80640.0 * t3 * t2) + 127.0 / (430080.0 * t3 * t2 * t2);
}

/// Hardy's Z(t) by the Riemann–Siegel formula, |Z(t)| = |ζ(½ + it)|.
[[nodiscard]] inline double hardy_z(double t, int correction_terms = 1) {
    if (correction_terms < 0 || correction_terms > 2)
        throw std::invalid_argument("correction_terms must be 0, 1 or 2");
    constexpr double pi = std::numbers::pi;
    const double a = std::sqrt(t / (2.0 * pi));
    const auto n_main = static_cast<long>(std::floor(a));
    const double p = a - static_cast<double>(n_main);
    const double z = 1.0 - 2.0 * p;
    const double theta = riemann_siegel_theta(t);

    CompensatedSum main;
    for (long n = 1; n <= n_main; ++n) {
        const double dn = static_cast<double>(n);
        main += std::cos(theta - t * std::log(dn)) / std::sqrt(dn);
    }

    double remainder = 0.0;
    double scale = 1.0;
    for (int k = 0; k <= correction_terms; ++k) {
        remainder += riemann_siegel_coefficient(k, z) * scale;
        scale /= a;
    }
    const double sign = (n_main - 1) % 2 == 0 ? 1.0 : -1.0;
    return 2.0 * main.value() + sign * remainder / std::sqrt(a);
}

[[nodiscard]] inline double zeta_abs_riemann_siegel(double t, int correction_terms = 1) {
    return std::abs(hardy_z(t, correction_terms));
}

/// ζ(½ + it) by Euler–Maclaurin summation with N = 10 + ⌈t/π⌉ direct terms.
/// em_terms == 0 stops adaptively once a correction falls below 1e-17.
[[nodiscard]] inline std::complex<double> zeta_euler_maclaurin(double t, int em_terms = 0) {
    using C = std::complex<double>;
    const C s(0.5, t);
    const auto big_n = static_cast<long>(10 + std::ceil(t / std::numbers::pi));

    CompensatedSum re;
    CompensatedSum im;
    for (long n = 1; n < big_n; ++n) {
        const double dn = static_cast<double>(n);
        const double mag = 1.0 / std::sqrt(dn);
        const double phase = t * std::log(dn);
        re += mag * std::cos(phase);
        im += -mag * std::sin(phase);
    }

    const double dN = static_cast<double>(big_n);
    const C n_pow_neg_s = std::exp(-s * std::log(dN));
    C tail = n_pow_neg_s * dN / (s - 1.0) + 0.5 * n_pow_neg_s;

    const auto& b = detail::bernoulli_over_factorial();
    const int limit = em_terms == 0 ? kMaxEulerMaclaurinTerms : em_terms;
    C rising = s;                               // s(s+1)…(s+2k−2)
    C n_factor = n_pow_neg_s / dN;              // N^{−s−2k+1}
    const C head(re.value(), im.value());
    for (int k = 1; k <= limit; ++k) {
        const C term = b[static_cast<std::size_t>(k - 1)] * rising * n_factor;
        tail += term;
        if (em_terms == 0 && std::abs(term) < 1e-17 * std::max(1.0, std::abs(head + tail))) break;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        n_factor /= dN * dN;
    }
    return head + tail;
}

[[nodiscard]] inline double zeta_abs_euler_maclaurin(double t, int em_terms = 0) {
    return std::abs(zeta_euler_maclaurin(t, em_terms));
}

/// |ζ(½ + it)| for t >= 0.
[[nodiscard]] inline double zeta_abs(double t, const ZetaEvalConfig& cfg = {}) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("t must be finite and >= 0");
    if (t <= cfg.t_switch()) return zeta_abs_euler_maclaurin(t, cfg.em_terms());
    return zeta_abs_riemann_siegel(t, cfg.rs_correction_terms());
}

}  // namespace mtl::zeta
