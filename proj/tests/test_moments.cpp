#include <catch_amalgamated.hpp>

#include <sstream>

#include "mtl/distribution_csv.hpp"
#include "mtl/moments.hpp"
#include "support/generators.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using mtl::EmpiricalDistribution;
using mtl::WeightedValue;

namespace {

EmpiricalDistribution two_point() { return EmpiricalDistribution({{2.0, 0.5}, {0.0, 0.5}}); }
EmpiricalDistribution three_point() { return EmpiricalDistribution({{1.0, 0.25}, {2.0, 0.25}, {3.0, 0.5}}); }

double hand_tail(const EmpiricalDistribution& d, double b) {
    double num = 0.0, den = 0.0;
    for (const auto& e : d.entries()) {
        den += e.weight;
        if (e.value > b) num += e.weight * e.value * e.value;
    }
    return num / den;
}

}  // namespace

TEST_CASE("constructor rejects invalid entries", "[moments]") {
    CHECK_THROWS_AS(EmpiricalDistribution({}), std::invalid_argument);
    CHECK_THROWS_AS(EmpiricalDistribution({{-1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(EmpiricalDistribution({{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(EmpiricalDistribution({{1.0, -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(EmpiricalDistribution({{std::nan(""), 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(EmpiricalDistribution({{1.0, INFINITY}}), std::invalid_argument);
}

TEST_CASE("normalize", "[moments]") {
    SECTION("already unit mean") {
        const auto n = mtl::normalize(two_point());
        CHECK(n.entries()[0].value == 2.0);
        CHECK(n.entries()[0].weight == 0.5);
        CHECK(n.normalized());
    }
    SECTION("scales values by the reciprocal mean") {
        const auto n = mtl::normalize(EmpiricalDistribution({{4.0, 0.5}, {0.0, 0.5}}));
        CHECK_THAT(n.entries()[0].value, WithinAbs(2.0, 1e-15));
        CHECK_THAT(n.entries()[1].value, WithinAbs(0.0, 1e-15));
    }
    SECTION("rescales weights") {
        const auto n = mtl::normalize(EmpiricalDistribution({{3.0, 2.0}, {0.0, 1.0}}));
        CHECK_THAT(n.entries()[0].value, WithinAbs(1.5, 1e-15));
        CHECK_THAT(n.entries()[0].weight, WithinAbs(2.0 / 3.0, 1e-15));
        CHECK_THAT(n.entries()[1].weight, WithinAbs(1.0 / 3.0, 1e-15));
    }
    SECTION("zero mean") {
        CHECK_THROWS_AS(mtl::normalize(EmpiricalDistribution({{0.0, 1.0}, {0.0, 2.0}})),
                        mtl::DegenerateDistribution);
    }
}

TEST_CASE("moment", "[moments]") {
    CHECK(mtl::moment(two_point(), 2) == 2.0);
    CHECK(mtl::moment(EmpiricalDistribution({{1.0, 1.0}}), 7) == 1.0);
    CHECK_THAT(mtl::moment(three_point(), 2), WithinAbs(1.0 * 0.25 + 4.0 * 0.25 + 9.0 * 0.5, 1e-15));
    CHECK_THROWS_AS(mtl::moment(two_point(), 0), std::invalid_argument);
}

TEST_CASE("tail_second_moment", "[moments]") {
    CHECK(mtl::tail_second_moment(two_point(), 1.0) == 2.0);
    CHECK(mtl::tail_second_moment(two_point(), 2.0) == 0.0);
    CHECK_THAT(mtl::tail_second_moment(three_point(), 1.5), WithinAbs(4.0 * 0.25 + 9.0 * 0.5, 1e-15));
}

TEST_CASE("verify_theorem", "[moments]") {
    SECTION("two point") {
        const std::vector<double> grid{1.0};
        const auto r = mtl::verify_theorem(two_point(), grid);
        CHECK(r.a == 2.0);
        CHECK(r.max_value == 2.0);
        CHECK_FALSE(r.degenerate);
        REQUIRE(r.checks.size() == 1);
        CHECK(r.checks[0].tail == 2.0);
        CHECK(r.checks[0].bound == 1.0);
        CHECK(r.all_hold());
    }
    SECTION("point mass is degenerate") {
        const std::vector<double> grid{0.0, 0.5, 3.0};
        const auto r = mtl::verify_theorem(EmpiricalDistribution({{1.0, 1.0}}), grid);
        CHECK(r.degenerate);
        CHECK(r.a == 1.0);
        CHECK(r.all_hold());
    }
}

TEST_CASE("max_lower_bound", "[moments]") {
    CHECK(mtl::max_lower_bound(1.0, 2.0) == 2.0);
    CHECK(mtl::max_lower_bound(2.0, 8.0) == 4.0);
    CHECK_THROWS_AS(mtl::max_lower_bound(2.0, 3.0), mtl::InconsistentMoments);
    CHECK_THROWS_AS(mtl::max_lower_bound(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("random distributions satisfy both halves of the inequality", "[moments][property]") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto d = gen::distribution(rng);
        const auto unit = mtl::normalize(d);
        const double a = mtl::moment(unit, 2);
        const auto grid = mtl::default_b_grid(a);
        const auto r = mtl::verify_theorem(d, grid);
        INFO("trial " << trial);
        CHECK_THAT(mtl::moment(unit, 1), WithinAbs(1.0, 1e-12));
        CHECK(r.all_hold());
        if (a > 1.0) CHECK(unit.max_value() >= a - 1e-9);
        for (const auto& c : r.checks) {
            CHECK(c.tail >= a - c.b - 1e-9);
            CHECK_THAT(c.tail, WithinAbs(hand_tail(unit, c.b), 1e-12));
        }
    }
}

TEST_CASE("normalize is idempotent", "[moments][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto once = mtl::normalize(gen::distribution(rng));
        const auto twice = mtl::normalize(once);
        REQUIRE(once.size() == twice.size());
        for (std::size_t i = 0; i < once.size(); ++i) {
            CHECK_THAT(twice.entries()[i].value, WithinAbs(once.entries()[i].value, 1e-12));
            CHECK_THAT(twice.entries()[i].weight, WithinAbs(once.entries()[i].weight, 1e-12));
        }
    }
}

TEST_CASE("tail is non-increasing in b and equals the second moment far left", "[moments][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gen::distribution(rng);
        CHECK_THAT(mtl::tail_second_moment(d, -1e300), WithinRel(mtl::moment(d, 2), 1e-14));
        double prev = INFINITY;
        for (double b = -1.0; b <= 11.0; b += 0.125) {
            const double t = mtl::tail_second_moment(d, b);
            CHECK(t <= prev);
            prev = t;
        }
    }
}

TEST_CASE("reports are scale invariant", "[moments][property]") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> log_scale(-6.0, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gen::distribution(rng);
        const double c = std::exp(log_scale(rng));
        std::vector<WeightedValue> scaled;
        for (const auto& e : d.entries()) scaled.push_back({c * e.value, e.weight});
        const auto grid = mtl::default_b_grid(mtl::moment(mtl::normalize(d), 2));
        const auto r1 = mtl::verify_theorem(d, grid);
        const auto r2 = mtl::verify_theorem(EmpiricalDistribution(scaled), grid);
        CHECK_THAT(r2.a, WithinAbs(r1.a, 1e-9));
        CHECK_THAT(r2.max_value, WithinAbs(r1.max_value, 1e-9));
        CHECK(r2.degenerate == r1.degenerate);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK_THAT(r2.checks[i].tail, WithinAbs(r1.checks[i].tail, 1e-9));
            CHECK(r2.checks[i].holds == r1.checks[i].holds);
        }
    }
}

TEST_CASE("distribution CSV", "[moments][csv]") {
    SECTION("reads rows, skipping blank lines") {
        std::istringstream in("value,weight\n2,0.5\n\n0,0.5\n");
        const auto d = mtl::read_distribution_csv(in);
        REQUIRE(d.size() == 2);
        CHECK(d.entries()[0].value == 2.0);
        CHECK(d.entries()[1].weight == 0.5);
    }
    SECTION("tolerates CRLF and a byte-order mark") {
        std::istringstream in("\xEF\xBB\xBFvalue,weight\r\n1.5,1\r\n");
        CHECK(mtl::read_distribution_csv(in).size() == 1);
    }
    auto error_line = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            (void)mtl::read_distribution_csv(in);
        } catch (const mtl::CsvError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(error_line("value,weight\n1,1\nx,1\n") == 3);
    CHECK(error_line("weight,value\n1,1\n") == 1);
    CHECK(error_line("value,weight\n1,1,1\n") == 2);
    CHECK(error_line("value,weight\n-1,1\n") == 2);
    CHECK(error_line("value,weight\n1,0\n") == 2);
    CHECK(error_line("value,weight\n") > 0);
}
