#include "spherequant/reference_cases.hpp"

#include <cmath>

#include "spherequant/continuous.hpp"
#include "spherequant/discrete.hpp"
#include "spherequant/frechet.hpp"

namespace spherequant {

namespace {

void add_row(std::vector<ReferenceRow>& rows, std::string name, double computed, double expected,
             double tol, bool relative = false, std::string note = "") {
    const double scale = relative ? std::max(std::abs(expected), 1e-300) : 1.0;
    const bool pass = std::abs(computed - expected) <= tol * scale;
    rows.push_back({std::move(name), computed, expected, tol, relative, pass, std::move(note)});
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        if (f(c) < f(d)) b = d; else a = c;
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    return (a + b) / 2.0;
}

}  // namespace

std::vector<ReferenceRow> run_reference_cases() {
    std::vector<ReferenceRow> rows;
    const double pi2 = kPi * kPi;

    // uniform continuous supports
    {
        const auto equator = CurveSupport::great_circle();
        add_row(rows, "equator, n=3: V_3", closed_form_error(equator.length(), 3), pi2 / 27.0,
                1e-12);
        const auto small = CurveSupport::small_circle(kPi / 3);
        add_row(rows, "small circle lat=pi/3, n=4: V_4", closed_form_error(small.length(), 4),
                pi2 / 192.0, 1e-12);
        const auto arc = CurveSupport::great_arc(kPi);
        const auto sol = optimal_uniform(arc, 2);
        add_row(rows, "arc L=pi, n=2: V_2", sol.error, pi2 / 48.0, 1e-12);
        add_row(rows, "arc L=pi, n=2: first midpoint", sol.codepoints_arclen[0], kPi / 4, 1e-12);
    }

    // discrete uniform arc, m=9 into n=3 blocks of three
    {
        const double L = kPi;
        const auto mu = sample_on_support(CurveSupport::great_arc(L), 9);
        const auto res = contiguous_dp(mu, 3);
        double direct = 0.0;  // blocks of three: offsets -L/9, 0, +L/9 around the middle point
        for (int b = 0; b < 3; ++b) direct += 2.0 * (L / 9.0) * (L / 9.0) / 9.0;
        add_row(rows, "discrete arc m=9, n=3: V_3", res.distortion, direct, 1e-12);
        bool balanced = res.partition.cluster_mass.size() == 3;
        for (double mass : res.partition.cluster_mass) balanced = balanced && std::abs(mass - 1.0 / 3.0) < 1e-12;
        add_row(rows, "discrete arc m=9, n=3: balanced blocks", balanced ? 1.0 : 0.0, 1.0, 0.0,
                false, "three contiguous blocks of size 3");
    }

    // antipodal pair
    {
        const auto mu = make_measure({SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0)}, {0.5, 0.5});
        add_row(rows, "antipodal pair: V_1", frechet_functional(mu, SpherePoint(0, 1, 0), 2.0),
                pi2 / 4.0, 1e-12);
        const auto ext = extrinsic_centroid(mu);
        add_row(rows, "antipodal pair: extrinsic centroid", ext.degenerate ? 1.0 : 0.0, 1.0, 0.0,
                false, "degenerate (undefined)");
        const Codebook both{{SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0)}, 2.0};
        add_row(rows, "antipodal pair: V_2", distortion(mu, both), 0.0, 0.0);
    }

    // three equally spaced equatorial points
    {
        std::vector<SpherePoint> pts;
        for (int k = 0; k < 3; ++k)
            pts.emplace_back(std::cos(2 * kPi * k / 3), std::sin(2 * kPi * k / 3), 0.0);
        const auto mu = make_measure(pts, {1.0 / 3, 1.0 / 3, 1.0 / 3});
        add_row(rows, "equatorial triple: V_1", frechet_functional(mu, SpherePoint(0, 0, 1), 2.0),
                pi2 / 4.0, 1e-12, false, "codepoint at a pole");
        const auto v2 = brute_force_optimal(mu, 2, CandidateMode::DataPoints);
        add_row(rows, "equatorial triple: V_2 (codepoints among the data)", v2.distortion,
                4.0 * pi2 / 27.0, 1e-12);
        add_row(rows, "equatorial triple: V_3", distortion(mu, Codebook{pts, 2.0}), 0.0, 0.0);
    }

    // two-point nonuniform weights 3/4, 1/4 on an antipodal pair
    {
        const auto f = [](double th) { return 0.75 * th * th + 0.25 * (kPi - th) * (kPi - th); };
        const double theta = golden_minimize(f, 0.0, kPi);
        add_row(rows, "two-point 3/4:1/4: theta*", theta, kPi / 4, 1e-6);
        add_row(rows, "two-point 3/4:1/4: V_1", f(theta), 3.0 * pi2 / 16.0, 1e-6);

        const auto mu = make_measure({SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0)}, {0.75, 0.25});
        const auto res = intrinsic_mean(mu, SpherePoint(0, 1, 0));
        add_row(rows, "two-point 3/4:1/4: intrinsic solver theta",
                geodesic_distance(*res.point, SpherePoint(1, 0, 0)), kPi / 4, 1e-6);
        add_row(rows, "two-point 3/4:1/4: intrinsic solver V_1", res.functional_value,
                3.0 * pi2 / 16.0, 1e-6);
    }

    // regular tetrahedron
    {
        const double a = 1.0 / std::sqrt(3.0);
        std::vector<SpherePoint> v{{a, a, a}, {a, -a, -a}, {-a, a, -a}, {-a, -a, a}};
        const auto mu = make_measure(v, {0.25, 0.25, 0.25, 0.25});
        const double pairwise = geodesic_distance(v[0], v[1]);
        add_row(rows, "tetrahedron: pairwise d_G", pairwise, std::acos(-1.0 / 3.0), 1e-12);
        add_row(rows, "tetrahedron: pairwise d_G (printed)", pairwise, 1.9106, 1e-3, true);
        const double v1 = distortion(mu, Codebook{{v[0]}, 2.0});
        const double exact = 0.75 * std::acos(-1.0 / 3.0) * std::acos(-1.0 / 3.0);
        add_row(rows, "tetrahedron: V_1", v1, exact, 1e-12);
        add_row(rows, "tetrahedron: V_1 (printed)", v1, 2.739, 1e-3, true);
    }

    // uniform discrete set on a small circle: cos^2 scaling
    {
        const double lat = kPi / 3;
        const auto base = sample_on_support(CurveSupport::great_circle(), 24);
        const auto tilted = sample_on_support(CurveSupport::small_circle(lat), 24);
        const double v0 = circular_contiguous_dp(base, 4).distortion;
        const double vl = circular_contiguous_dp(tilted, 4).distortion;
        add_row(rows, "small-circle discrete m=24, n=4: V(lat)/V(0)", vl / v0,
                std::cos(lat) * std::cos(lat), 1e-12);
    }

    // spherical triangle of unit axes
    {
        const auto mu = make_measure(
            {SpherePoint(1, 0, 0), SpherePoint(0, 1, 0), SpherePoint(0, 0, 1)},
            {1.0 / 3, 1.0 / 3, 1.0 / 3});
        const auto ext = extrinsic_centroid(mu);
        const double a = 1.0 / std::sqrt(3.0);
        add_row(rows, "unit-axes triple: centroid offset",
                geodesic_distance(*ext.point, SpherePoint(a, a, a)), 0.0, 1e-12);
        const double d = geodesic_distance(mu.points[0], *ext.point);
        add_row(rows, "unit-axes triple: d_G to centroid", d, std::acos(1.0 / std::sqrt(3.0)),
                1e-12);
        add_row(rows, "unit-axes triple: d_G to centroid (printed)", d, 0.9553, 1e-3, true);
        add_row(rows, "unit-axes triple: V_1 (printed)", ext.functional_value, 0.9126, 1e-3, true);
    }

    return rows;
}

}  // namespace spherequant
