#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spherequant/asymptotics.hpp"
#include "spherequant/continuous.hpp"
#include "spherequant/discrete.hpp"
#include "test_util.hpp"

using namespace spherequant;
using doctest::Approx;

namespace {

ErrorSequence power_law(double C, double exponent, double r, int n_lo, int n_hi, int stride = 1) {
    std::vector<ErrorEntry> e;
    for (int n = n_lo; n <= n_hi; n += stride)
        e.push_back({n, C * std::pow(double(n), -exponent), r});
    return make_error_sequence(std::move(e));
}

}  // namespace

TEST_CASE("exact power laws recover their dimension") {
    const auto equator = power_law(kPi * kPi / 3, 2.0, 2.0, 2, 128);
    CHECK(estimate_dimension(equator).dimension == Approx(1.0).epsilon(1e-9));

    CHECK(estimate_dimension(power_law(0.7, 4.0, 2.0, 2, 100)).dimension ==
          Approx(0.5).epsilon(1e-9));
    CHECK(estimate_dimension(power_law(3.0, 1.0, 1.0, 2, 100)).dimension ==
          Approx(1.0).epsilon(1e-9));
    CHECK(estimate_dimension(equator).r_squared == Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        const double C = 0.1 + testutil::uniform01(rng) * 5.0;
        const double s = 0.25 + testutil::uniform01(rng) * 3.0;
        const double r = 1.0 + testutil::uniform01(rng) * 3.0;
        const auto seq = power_law(C, r / s, r, 2, 64, 3);
        CHECK(estimate_dimension(seq).dimension == Approx(s).epsilon(1e-9));
        const auto coeff = estimate_coefficient(seq, s);
        CHECK(coeff.lower == Approx(C).epsilon(1e-9));
        CHECK(coeff.upper == Approx(C).epsilon(1e-9));
    }
}

TEST_CASE("coefficient windows for the uniform circle rows") {
    const auto equator = power_law((2 * kPi) * (2 * kPi) / 12, 2.0, 2.0, 2, 128);
    const auto c = estimate_coefficient(equator, 1.0);
    CHECK(c.lower == Approx(kPi * kPi / 3).epsilon(1e-9));
    CHECK(c.upper == Approx(kPi * kPi / 3).epsilon(1e-9));

    const double lat = kPi / 3;
    const auto small = power_law(kPi * kPi / 3 * std::cos(lat) * std::cos(lat), 2.0, 2.0, 2, 128);
    const auto cs = estimate_coefficient(small, 1.0);
    CHECK(cs.lower == Approx(kPi * kPi / 12).epsilon(1e-9));
    CHECK(cs.upper == Approx(kPi * kPi / 12).epsilon(1e-9));

    const auto constant_over_n2 = power_law(0.42, 2.0, 2.0, 4, 64);
    const auto cc = estimate_coefficient(constant_over_n2, 1.0);
    CHECK(cc.lower == Approx(0.42).epsilon(1e-9));
}

TEST_CASE("validation and warnings") {
    CHECK_THROWS_AS(make_error_sequence({{2, 0.5, 2.0}, {2, 0.4, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_error_sequence({{2, 0.5, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(estimate_dimension(make_error_sequence({{2, 0.5, 2.0}, {4, 0.2, 2.0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        estimate_dimension(make_error_sequence({{2, 0.5, 2.0}, {4, 0.2, 2.0}, {8, 0.1, 1.0}})),
        std::invalid_argument);
    CHECK_THROWS_AS(estimate_dimension(make_error_sequence(
                        {{2, 0.5, 2.0}, {4, 0.0, 2.0}, {8, 0.0, 2.0}, {16, 0.0, 2.0}})),
                    std::invalid_argument);

    const auto noisy = make_error_sequence({{2, 0.5, 2.0}, {4, 0.6, 2.0}, {8, 0.0, 2.0}});
    const auto warnings = noisy.warnings();
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].find("increases") != std::string::npos);
    CHECK(warnings[1].find("zero error") != std::string::npos);

    // zero entries are excluded but the fit still runs on the rest
    const auto mixed = make_error_sequence(
        {{2, 0.5, 2.0}, {3, 0.0, 2.0}, {4, 0.125, 2.0}, {8, 0.015625, 2.0}, {16, 0.001953125, 2.0}});
    CHECK(estimate_dimension(mixed).points_used == 4);
}

TEST_CASE("dimension estimate is consistent with the DP solver on the equator") {
    std::vector<ErrorEntry> entries;
    for (int n : {2, 4, 8, 16}) {
        const auto mu = sample_on_support(CurveSupport::great_circle(), 3 * n);
        entries.push_back({n, circular_contiguous_dp(mu, n).distortion, 2.0});
    }
    const double d = estimate_dimension(make_error_sequence(std::move(entries))).dimension;
    CHECK(d >= 0.98);
    CHECK(d <= 1.02);
}
