#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherequant/frechet.hpp"
#include "test_util.hpp"

using namespace spherequant;
using doctest::Approx;

namespace {

DiscreteMeasure antipodal_pair(double w1 = 0.5) {
    return make_measure({SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0)}, {w1, 1.0 - w1});
}

DiscreteMeasure unit_axes() {
    return make_measure({SpherePoint(1, 0, 0), SpherePoint(0, 1, 0), SpherePoint(0, 0, 1)},
                        {1.0 / 3, 1.0 / 3, 1.0 / 3});
}

}  // namespace

TEST_CASE("frechet functional on the reference configurations") {
    const auto point_mass = make_measure({SpherePoint(0, 0, 1)}, {1.0});
    for (double r : {1.0, 2.0, 3.5}) CHECK(frechet_functional(point_mass, SpherePoint(0, 0, 1), r) == 0.0);

    CHECK(frechet_functional(antipodal_pair(), SpherePoint(0, 1, 0), 2.0) ==
          Approx(kPi * kPi / 4).epsilon(1e-12));

    const double a = 1.0 / std::sqrt(3.0);
    const double expected = std::acos(a) * std::acos(a);
    CHECK(frechet_functional(unit_axes(), SpherePoint(a, a, a), 2.0) ==
          Approx(expected).epsilon(1e-12));
    CHECK(frechet_functional(unit_axes(), SpherePoint(a, a, a), 2.0) ==
          Approx(0.9126).epsilon(1e-3));

    CHECK_THROWS_AS(frechet_functional(unit_axes(), SpherePoint(0, 0, 2, 2), 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(frechet_functional(unit_axes(), SpherePoint(a, a, a), 0.0),
                    std::invalid_argument);
}

TEST_CASE("log map: examples and failure modes") {
    const SpherePoint a(1, 0, 0);
    const auto zero = log_map(a, a);
    CHECK(zero.norm() == 0.0);

    const auto v = log_map(a, SpherePoint(0, 1, 0));
    CHECK(v.x == Approx(0.0).epsilon(1e-12));
    CHECK(v.y == Approx(kPi / 2).epsilon(1e-12));
    CHECK(v.z == Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(log_map(a, SpherePoint(-1, 0, 0)), std::domain_error);
}

TEST_CASE("exp map: examples and failure modes") {
    const SpherePoint a(1, 0, 0);
    const auto same = exp_map(a, {0, 0, 0});
    CHECK(same.x == a.x);

    const auto q = exp_map(a, {0, kPi / 2, 0});
    CHECK(q.x == Approx(0.0).epsilon(1e-12));
    CHECK(q.y == Approx(1.0).epsilon(1e-12));

    const auto anti = exp_map(a, {0, kPi, 0});
    CHECK(anti.x == Approx(-1.0).epsilon(1e-12));

    CHECK_THROWS_AS(exp_map(a, {1.0, 0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse away from antipodes") {
    std::mt19937_64 rng(21);
    int checked = 0;
    while (checked < 1000) {
        const double rho = checked % 2 ? 1.0 : 2.0;
        const auto a = testutil::random_point(rng, rho);
        const auto x = testutil::random_point(rng, rho);
        if (central_angle(a, x) >= kPi - 1e-6) continue;
        ++checked;
        const auto v = log_map(a, x);
        CHECK(std::abs(v.dot(a.unit())) <= 1e-12 * std::max(1.0, v.norm()));
        CHECK(v.norm() == Approx(geodesic_distance(a, x)).epsilon(1e-12));
        const auto back = exp_map(a, v);
        CHECK((back.vec() - x.vec()).norm() <= 1e-10 * rho);
    }
}

TEST_CASE("extrinsic centroid: degenerate pair, axes triple, single point") {
    const auto res = extrinsic_centroid(antipodal_pair());
    CHECK(res.degenerate);
    CHECK_FALSE(res.point.has_value());

    const auto tri = extrinsic_centroid(unit_axes());
    REQUIRE(tri.point.has_value());
    const double a = 1.0 / std::sqrt(3.0);
    CHECK(geodesic_distance(*tri.point, SpherePoint(a, a, a)) <= 1e-12);
    CHECK(tri.point->vec().norm() == Approx(1.0).epsilon(1e-14));

    const auto single = extrinsic_centroid(make_measure({SpherePoint(0.6, 0.0, 0.8)}, {1.0}));
    REQUIRE(single.point.has_value());
    CHECK(geodesic_distance(*single.point, SpherePoint(0.6, 0.0, 0.8)) <= 1e-12);
}

TEST_CASE("extrinsic centroid output always has norm rho") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const double rho = t % 2 ? 1.0 : 3.0;
        const auto mu = testutil::random_measure(rng, 2 + t % 7, kPi, rho);
        const auto res = extrinsic_centroid(mu);
        if (res.degenerate) continue;
        CHECK(std::abs(res.point->vec().norm() - rho) <= 1e-12 * rho);
    }
}

TEST_CASE("intrinsic mean: point mass and symmetric pair") {
    const auto point_mass = make_measure({SpherePoint(0, 1, 0)}, {1.0});
    const auto res = intrinsic_mean(point_mass, SpherePoint(1, 0, 0));
    CHECK(res.converged);
    CHECK(geodesic_distance(*res.point, SpherePoint(0, 1, 0)) <= 1e-9);

    const double ang = 0.8;
    const auto pair = make_measure(
        {geo_to_cartesian({0.0, -ang}, 1.0), geo_to_cartesian({0.0, ang}, 1.0)}, {0.5, 0.5});
    const auto mid = intrinsic_mean(pair, geo_to_cartesian({0.0, 0.3}, 1.0));
    CHECK(mid.converged);
    CHECK(geodesic_distance(*mid.point, SpherePoint(1, 0, 0)) <= 1e-9);
    CHECK(mid.gradient_norm <= 1e-10);
}

TEST_CASE("intrinsic mean of the 3/4 : 1/4 antipodal pair sits a quarter turn in") {
    const auto mu = antipodal_pair(0.75);
    const auto res = intrinsic_mean(mu, SpherePoint(0, 1, 0));
    CHECK(res.converged);
    CHECK(geodesic_distance(*res.point, SpherePoint(1, 0, 0)) == Approx(kPi / 4).epsilon(1e-6));
    CHECK(res.functional_value == Approx(3 * kPi * kPi / 16).epsilon(1e-6));
}

TEST_CASE("intrinsic mean recovers from an iterate antipodal to a data point") {
    const auto mu = antipodal_pair(0.75);
    const auto res = intrinsic_mean(mu, SpherePoint(-1, 0, 0));  // antipodal to x1
    CHECK(res.converged);
    CHECK(res.functional_value == Approx(3 * kPi * kPi / 16).epsilon(1e-6));
}

TEST_CASE("intrinsic mean rejects bad options") {
    const auto mu = unit_axes();
    CHECK_THROWS_AS(intrinsic_mean(mu, SpherePoint(1, 0, 0), {0.0, 1e-10, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(intrinsic_mean(mu, SpherePoint(1, 0, 0), {1.0, 0.0, 100}),
                    std::invalid_argument);
}

TEST_CASE("karcher iteration decreases the functional on half-sphere measures") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 10; ++t) {
        const auto mu = testutil::random_measure(rng, 20, kPi / 2 * 0.9);
        const auto init = mu.points[0];
        double prev = frechet_functional(mu, init, 2.0);
        for (int k = 1; k <= 30; ++k) {
            const auto res = intrinsic_mean(mu, init, {1.0, 1e-14, k});
            CHECK(res.functional_value <= prev + 1e-12);
            prev = res.functional_value;
        }
    }
}

TEST_CASE("symmetric geodesic intervals have the midpoint as intrinsic mean") {
    // equally spaced, equally weighted points on a geodesic segment
    std::vector<SpherePoint> pts;
    const int m = 7;
    for (int k = 0; k < m; ++k) pts.push_back(geo_to_cartesian({0.0, -0.6 + 0.2 * k}, 1.0));
    std::vector<double> w(m, 1.0 / m);
    const auto mu = make_measure(pts, w);
    const auto res = intrinsic_mean(mu, pts[1]);
    CHECK(geodesic_distance(*res.point, geo_to_cartesian({0.0, 0.0}, 1.0)) <= 1e-9);
}

TEST_CASE("intrinsic and extrinsic means agree on tight clusters") {
    std::mt19937_64 rng(31);
    double prev_gap = 0.0;
    for (double radius : {0.01, 0.1, 0.7}) {
        double max_gap = 0.0;
        for (int t = 0; t < 20; ++t) {
            const auto mu = testutil::random_measure(rng, 12, radius);
            const auto ext = extrinsic_centroid(mu);
            REQUIRE(ext.point.has_value());
            const auto intr = intrinsic_mean(mu, *ext.point);
            max_gap = std::max(max_gap, geodesic_distance(*intr.point, *ext.point));
        }
        if (radius == 0.01) CHECK(max_gap <= 1e-6);
        CHECK(max_gap >= prev_gap);  // the gap grows with the spread
        prev_gap = max_gap;
    }
}
