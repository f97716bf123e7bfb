#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "mtl/zeta_moments.hpp"
#include "oracles/zeta_oracle.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
namespace z = mtl::zeta;

// 20-digit reference values of |ζ(½ + it)|.
namespace frozen {
constexpr double at_0 = 1.4603545088095868129;
constexpr double at_40 = 1.308882393456599159;
constexpr double at_50 = 0.34073500595502498275;
constexpr double at_60 = 0.58695049071087436762;
constexpr double at_100 = 2.692697056664463475;
constexpr double at_1000 = 0.99779463752158661399;
constexpr double at_5000 = 0.80425723635293984958;
}  // namespace frozen

TEST_CASE("oracles agree with frozen values", "[zeta][oracle]") {
    CHECK_THAT(oracle::zeta_abs_eta(0.0), WithinAbs(frozen::at_0, 1e-15));
    CHECK_THAT(oracle::zeta_abs_eta(50.0), WithinAbs(frozen::at_50, 1e-15));
    CHECK_THAT(oracle::zeta_abs_euler_maclaurin(100.0), WithinAbs(frozen::at_100, 1e-15));
    CHECK_THAT(oracle::zeta_abs_euler_maclaurin(40.0), WithinAbs(frozen::at_40, 1e-15));
}

TEST_CASE("config validation", "[zeta]") {
    CHECK_THROWS_AS(z::ZetaEvalConfig(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(z::ZetaEvalConfig(-5.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(z::ZetaEvalConfig(50.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(z::ZetaEvalConfig(50.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(z::ZetaEvalConfig(50.0, 1, 16), std::invalid_argument);
    const z::ZetaEvalConfig cfg;
    CHECK(cfg.t_switch() == 50.0);
    CHECK(cfg.rs_correction_terms() == 1);
    CHECK_THROWS_AS(z::zeta_abs(-1.0), std::invalid_argument);
}

TEST_CASE("zeta_abs point values", "[zeta]") {
    CHECK_THAT(z::zeta_abs(0.0), WithinAbs(oracle::zeta_abs_eta(0.0), 1e-12));
    CHECK(z::zeta_abs(14.134725142) <= 1e-3);
    CHECK(z::zeta_abs(21.022039639) <= 1e-3);
    CHECK_THAT(z::zeta_abs(40.0), WithinAbs(frozen::at_40, 1e-12));
    CHECK_THAT(z::zeta_abs(100.0), WithinAbs(oracle::zeta_abs_euler_maclaurin(100.0), 1e-3));
    CHECK_THAT(z::zeta_abs(1000.0), WithinAbs(frozen::at_1000, 1e-4));
    CHECK_THAT(z::zeta_abs(5000.0), WithinAbs(frozen::at_5000, 1e-4));
    CHECK_THAT(z::zeta_abs_euler_maclaurin(100.0), WithinAbs(frozen::at_100, 1e-12));
}

TEST_CASE("Riemann-Siegel improves with more correction terms", "[zeta]") {
    double worst[3] = {0.0, 0.0, 0.0};
    for (double t = 40.0; t <= 60.0; t += 0.25) {
        const double ref = z::zeta_abs_euler_maclaurin(t);
        for (int k = 0; k <= 2; ++k) worst[k] = std::max(worst[k], std::abs(z::zeta_abs_riemann_siegel(t, k) - ref));
    }
    CHECK(worst[0] < 2e-2);
    CHECK(worst[1] < 2e-3);
    CHECK(worst[2] < 1e-4);
    CHECK(worst[2] < worst[1]);
    CHECK(worst[1] < worst[0]);
}

TEST_CASE("two methods agree on the crossover band", "[zeta]") {
    for (double t : {40.0, 50.0, 60.0}) {
        const double eta = oracle::zeta_abs_eta(t);
        CHECK_THAT(z::zeta_abs_euler_maclaurin(t), WithinAbs(eta, 1e-12));
        CHECK_THAT(z::zeta_abs_riemann_siegel(t), WithinAbs(eta, 2e-3));
    }
    CHECK_THAT(z::zeta_abs(60.0), WithinAbs(frozen::at_60, 2e-3));
}

TEST_CASE("e^{i theta} zeta is real on the critical line", "[zeta]") {
    for (double t : {20.0, 100.0, 1000.0}) {
        const double theta = z::riemann_siegel_theta(t);
        const auto s = z::zeta_euler_maclaurin(t);
        const double imag = std::sin(theta) * s.real() + std::cos(theta) * s.imag();
        CHECK(std::abs(imag) < 1e-9);
    }
}

TEST_CASE("moment_integral preconditions", "[zeta][moments]") {
    CHECK_THROWS_AS(z::moment_integral(0.0, 0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(z::moment_integral(-1.0, 10.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(z::moment_integral(0.0, 10.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(z::moment_integral(0.0, 10.0, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(z::moment_integral(0.0, 10.0, 2, 5.0), std::invalid_argument);
}

TEST_CASE("moment_integral flags coarse steps", "[zeta][moments]") {
    const auto coarse = z::moment_integral(100.0, 10.0, 2, 0.5);
    CHECK(coarse.coarse_step_warning);
    const auto fine = z::moment_integral(100.0, 10.0, 2, 0.05);
    CHECK_FALSE(fine.coarse_step_warning);
    CHECK(fine.nodes == 201);
    CHECK(fine.value > 0.0);
}

TEST_CASE("mean square over [0, 200] against a finer quadrature", "[zeta][moments]") {
    const auto est = z::moment_integral(0.0, 200.0, 2);
    const auto oracle_est = z::moment_integral(0.0, 200.0, 2, 0.01);
    CHECK_THAT(est.value, WithinRel(oracle_est.refined_value, 1e-6));
    CHECK_THAT(est.value, WithinRel(z::ingham_main(200.0), 0.10));
    CHECK(est.converged);
}

TEST_CASE("fourth moment is stable under step halving", "[zeta][moments]") {
    const auto est = z::moment_integral(1000.0, 100.0, 4);
    CHECK(est.value > 0.0);
    CHECK(est.relative_change < 0.005);
    CHECK(est.converged);
}

TEST_CASE("Cauchy-Schwarz between the second and fourth moments", "[zeta][moments][property]") {
    for (auto [T, H] : {std::pair{0.0, 50.0}, {100.0, 30.0}, {500.0, 60.0}, {2000.0, 20.0}}) {
        const double m2 = z::moment_integral(T, H, 2).value;
        const double m4 = z::moment_integral(T, H, 4).value;
        CHECK(m4 * H >= m2 * m2 * (1.0 - 1e-6));
    }
}

TEST_CASE("estimates do not depend on the worker count", "[zeta][moments]") {
    const auto one = z::moment_integral(300.0, 40.0, 4, z::kDefaultStep, {}, 1);
    const auto four = z::moment_integral(300.0, 40.0, 4, z::kDefaultStep, {}, 4);
    CHECK(one.value == four.value);
    CHECK(one.refined_value == four.refined_value);
}

TEST_CASE("ingham_main", "[zeta]") {
    constexpr double pi = std::numbers::pi;
    constexpr double gamma = z::kEulerGamma;
    CHECK_THAT(z::ingham_main(2.0 * pi), WithinRel((2.0 * gamma - 1.0) * 2.0 * pi, 1e-14));
    CHECK_THAT(z::ingham_main(2.0 * pi * std::numbers::e), WithinRel(2.0 * pi * std::numbers::e * 2.0 * gamma, 1e-14));
    CHECK_THAT(z::ingham_main(1000.0), WithinRel(5224.3095423758572897, 1e-14));
    CHECK_THROWS_AS(z::ingham_main(0.0), std::invalid_argument);
}

TEST_CASE("im_leading", "[zeta]") {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    const double e = std::numbers::e;
    CHECK_THAT(z::im_leading(e), WithinRel(e / (2.0 * pi2), 1e-14));
    CHECK_THAT(z::im_leading(e * e), WithinRel(16.0 * e * e / (2.0 * pi2), 1e-14));
    CHECK_THAT(z::im_leading(1000.0), WithinRel(115350.11520999421679, 1e-14));
}

TEST_CASE("corollary1_report on [500, 1000]", "[zeta][tail]") {
    const auto r = z::corollary1_report(500.0, 500.0);
    CHECK_THAT(r.e_xi, WithinAbs(1.0, 1e-9));
    CHECK(r.a > 1.0);
    CHECK_FALSE(r.degenerate);
    CHECK(r.holds);
    CHECK(r.tail >= r.a - r.b - 1e-9);
    CHECK_THAT(r.b, WithinRel(std::pow(std::log(500.0), 2) / (4.0 * std::numbers::pi * std::numbers::pi), 1e-14));
    CHECK(r.restricted_fourth <= r.fourth_moment);
    CHECK(r.measure_of_set <= r.H + 1e-9);
    CHECK(r.at_inv_two_pi.threshold > r.at_inv_four_pi_sq.threshold);
    CHECK(r.at_inv_two_pi.restricted_fourth <= r.at_inv_four_pi_sq.restricted_fourth);
    CHECK(r.fourth_moment * r.H >= r.second_moment * r.second_moment);
    CHECK(r.h_exceeds_t_two_thirds);
}

TEST_CASE("corollary1_report a > 1 at [1000, 2000] with a halved-step check", "[zeta][tail]") {
    const auto r = z::corollary1_report(1000.0, 1000.0);
    const auto half = z::corollary1_report(1000.0, 1000.0, z::kThresholdInvFourPiSq, z::kDefaultStep / 2.0);
    CHECK(r.a > 1.0);
    CHECK(half.a > 1.0);
    CHECK_THAT(r.a, WithinRel(half.a, 1e-3));
    CHECK(r.holds);
}

TEST_CASE("corollary1_report preconditions", "[zeta][tail]") {
    CHECK_THROWS_AS(z::corollary1_report(5.0, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(z::corollary1_report(100.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(z::corollary1_report(100.0, 100.0, 0.0), std::invalid_argument);
}
