#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spherequant/asymptotics.hpp"
#include "spherequant/continuous.hpp"
#include "spherequant/discrete.hpp"
#include "spherequant/frechet.hpp"
#include "spherequant/reference_cases.hpp"

namespace py = pybind11;
using namespace spherequant;

PYBIND11_MODULE(_core, m) {
    m.doc() = "intrinsic quantization on spheres and spherical curves";

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readonly("x", &Vec3::x)
        .def_readonly("y", &Vec3::y)
        .def_readonly("z", &Vec3::z)
        .def("norm", &Vec3::norm)
        .def("dot", &Vec3::dot)
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });

    py::class_<SpherePoint>(m, "SpherePoint")
        .def(py::init<double, double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"),
             py::arg("rho") = 1.0)
        .def_readonly("x", &SpherePoint::x)
        .def_readonly("y", &SpherePoint::y)
        .def_readonly("z", &SpherePoint::z)
        .def_readonly("rho", &SpherePoint::rho)
        .def_static("project", &SpherePoint::project, py::arg("v"), py::arg("rho"))
        .def("__repr__", [](const SpherePoint& p) {
            return "SpherePoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
                   std::to_string(p.z) + ", rho=" + std::to_string(p.rho) + ")";
        });

    py::class_<GeoCoord>(m, "GeoCoord")
        .def(py::init<double, double>(), py::arg("lat"), py::arg("lon"))
        .def_readwrite("lat", &GeoCoord::lat)
        .def_readwrite("lon", &GeoCoord::lon);

    py::class_<GeoFromCartesian>(m, "GeoFromCartesian")
        .def_readonly("geo", &GeoFromCartesian::geo)
        .def_readonly("pole_degenerate", &GeoFromCartesian::pole_degenerate);

    m.def("geo_to_cartesian", &geo_to_cartesian, py::arg("geo"), py::arg("rho") = 1.0);
    m.def("cartesian_to_geo", &cartesian_to_geo, py::arg("point"));
    m.def("geodesic_distance", &geodesic_distance, py::arg("p1"), py::arg("p2"));
    m.def("central_angle", &central_angle, py::arg("p1"), py::arg("p2"));
    m.def("slerp", &slerp, py::arg("a"), py::arg("b"), py::arg("tau"));

    py::class_<CurveSupport>(m, "CurveSupport")
        .def_static("great_circle", [](double rho) { return CurveSupport::great_circle(rho); },
                    py::arg("rho") = 1.0)
        .def_static("small_circle",
                    [](double lat, double rho) { return CurveSupport::small_circle(lat, rho); },
                    py::arg("latitude"), py::arg("rho") = 1.0)
        .def_static("great_arc",
                    [](double length, double rho) { return CurveSupport::great_arc(length, rho); },
                    py::arg("length"), py::arg("rho") = 1.0)
        .def_property_readonly("rho", &CurveSupport::rho)
        .def_property_readonly("length", &CurveSupport::length)
        .def("point_at", &CurveSupport::point_at, py::arg("s"))
        .def("curve_distance", &CurveSupport::curve_distance, py::arg("s1"), py::arg("s2"))
        .def("locate", &CurveSupport::locate, py::arg("point"));

    py::class_<DiscreteMeasure>(m, "DiscreteMeasure")
        .def(py::init(&make_measure), py::arg("points"), py::arg("weights"))
        .def_readonly("points", &DiscreteMeasure::points)
        .def_readonly("weights", &DiscreteMeasure::weights)
        .def("__len__", &DiscreteMeasure::size);

    py::class_<CurveMeasure>(m, "CurveMeasure")
        .def_readonly("arclen", &CurveMeasure::arclen)
        .def_readonly("weights", &CurveMeasure::weights)
        .def("to_measure", &CurveMeasure::to_measure)
        .def("__len__", &CurveMeasure::size);

    m.def("sample_equally_spaced", &sample_equally_spaced, py::arg("support"), py::arg("m"));
    m.def("sample_on_support", &sample_on_support, py::arg("support"), py::arg("m"));
    m.def("measure_on_support", &measure_on_support, py::arg("support"), py::arg("measure"));

    py::class_<MeanResult>(m, "MeanResult")
        .def_readonly("point", &MeanResult::point)
        .def_readonly("functional_value", &MeanResult::functional_value)
        .def_readonly("gradient_norm", &MeanResult::gradient_norm)
        .def_readonly("iterations", &MeanResult::iterations)
        .def_readonly("converged", &MeanResult::converged)
        .def_readonly("degenerate", &MeanResult::degenerate);

    m.def("frechet_functional", &frechet_functional, py::arg("mu"), py::arg("q"),
          py::arg("r") = 2.0);
    m.def("log_map", &log_map, py::arg("a"), py::arg("x"));
    m.def("exp_map", &exp_map, py::arg("a"), py::arg("v"));
    m.def("extrinsic_centroid", &extrinsic_centroid, py::arg("mu"));
    m.def(
        "intrinsic_mean",
        [](const DiscreteMeasure& mu, const SpherePoint& init, double step, double tol,
           int max_iter) { return intrinsic_mean(mu, init, {step, tol, max_iter}); },
        py::arg("mu"), py::arg("init"), py::arg("step") = 1.0, py::arg("tol") = 1e-10,
        py::arg("max_iter") = 10000);

    py::class_<ContinuousSolution>(m, "ContinuousSolution")
        .def_readonly("n", &ContinuousSolution::n)
        .def_readonly("order", &ContinuousSolution::order)
        .def_readonly("codepoints_arclen", &ContinuousSolution::codepoints_arclen)
        .def_readonly("cell_boundaries_arclen", &ContinuousSolution::cell_boundaries_arclen)
        .def_readonly("error", &ContinuousSolution::error);

    m.def("optimal_uniform", &optimal_uniform, py::arg("support"), py::arg("n"),
          py::arg("r") = 2.0);
    m.def("closed_form_error", &closed_form_error, py::arg("L"), py::arg("n"), py::arg("r") = 2.0);
    m.def("cell_conditional_error", &cell_conditional_error, py::arg("h"), py::arg("r") = 2.0);
    m.def("numeric_distortion", &numeric_distortion, py::arg("support"),
          py::arg("codepoints_arclen"), py::arg("r") = 2.0, py::arg("quad_points") = 100000);
    m.def("exchange_gradient", &exchange_gradient, py::arg("h1"), py::arg("h2"));

    py::enum_<CentroidMode>(m, "CentroidMode")
        .value("Extrinsic", CentroidMode::Extrinsic)
        .value("Intrinsic", CentroidMode::Intrinsic);
    py::enum_<PointMetric>(m, "PointMetric")
        .value("Geodesic", PointMetric::Geodesic)
        .value("Chordal", PointMetric::Chordal);
    py::enum_<CandidateMode>(m, "CandidateMode")
        .value("DataPoints", CandidateMode::DataPoints)
        .value("BlockCenters", CandidateMode::BlockCenters);

    py::class_<Codebook>(m, "Codebook")
        .def(py::init<std::vector<SpherePoint>, double>(), py::arg("codepoints"),
             py::arg("order") = 2.0)
        .def_readonly("codepoints", &Codebook::codepoints)
        .def_readonly("order", &Codebook::order);

    py::class_<VoronoiPartition>(m, "VoronoiPartition")
        .def_readonly("assignment", &VoronoiPartition::assignment)
        .def_readonly("cluster_mass", &VoronoiPartition::cluster_mass);

    py::class_<QuantizationResult>(m, "QuantizationResult")
        .def_readonly("codebook", &QuantizationResult::codebook)
        .def_readonly("partition", &QuantizationResult::partition)
        .def_readonly("distortion", &QuantizationResult::distortion)
        .def_readonly("iterations", &QuantizationResult::iterations)
        .def_readonly("converged", &QuantizationResult::converged)
        .def_readonly("seed", &QuantizationResult::seed)
        .def_readonly("distortion_history", &QuantizationResult::distortion_history);

    m.def("voronoi_assign", &voronoi_assign, py::arg("mu"), py::arg("codebook"),
          py::arg("metric") = PointMetric::Geodesic);
    m.def("distortion", &distortion, py::arg("mu"), py::arg("codebook"),
          py::arg("metric") = PointMetric::Geodesic);
    m.def(
        "lloyd",
        [](const DiscreteMeasure& mu, int n, const std::string& mode, std::uint64_t seed,
           int restarts, double tol, int max_iter) {
            LloydOptions opts;
            opts.n = n;
            opts.mode = mode == "intrinsic" ? CentroidMode::Intrinsic : CentroidMode::Extrinsic;
            opts.seed = seed;
            opts.tol = tol;
            opts.max_iter = max_iter;
            return restarts > 1 ? lloyd_best_of(mu, opts, restarts) : lloyd(mu, opts);
        },
        py::arg("mu"), py::arg("n"), py::arg("mode") = "extrinsic", py::arg("seed") = 0,
        py::arg("restarts") = 1, py::arg("tol") = 1e-12, py::arg("max_iter") = 200);
    m.def(
        "block_center",
        [](const std::vector<double>& s, const std::vector<double>& w) {
            return block_center(std::span(s), std::span(w));
        },
        py::arg("arclen"), py::arg("weights"));
    m.def("contiguous_dp", &contiguous_dp, py::arg("mu"), py::arg("n"));
    m.def("circular_contiguous_dp", &circular_contiguous_dp, py::arg("mu"), py::arg("n"));
    m.def("brute_force_optimal",
          py::overload_cast<const DiscreteMeasure&, int, CandidateMode>(&brute_force_optimal),
          py::arg("mu"), py::arg("n"), py::arg("mode") = CandidateMode::BlockCenters);
    m.def("brute_force_optimal_on_support",
          py::overload_cast<const CurveMeasure&, int, CandidateMode>(&brute_force_optimal),
          py::arg("mu"), py::arg("n"), py::arg("mode") = CandidateMode::BlockCenters);

    py::class_<ErrorEntry>(m, "ErrorEntry")
        .def(py::init<long long, double, double>(), py::arg("n"), py::arg("v"),
             py::arg("r") = 2.0)
        .def_readonly("n", &ErrorEntry::n)
        .def_readonly("v", &ErrorEntry::v)
        .def_readonly("r", &ErrorEntry::r);

    py::class_<DimensionEstimate>(m, "DimensionEstimate")
        .def_readonly("dimension", &DimensionEstimate::dimension)
        .def_readonly("slope", &DimensionEstimate::slope)
        .def_readonly("r_squared", &DimensionEstimate::r_squared)
        .def_readonly("points_used", &DimensionEstimate::points_used);

    py::class_<CoefficientEstimate>(m, "CoefficientEstimate")
        .def_readonly("lower", &CoefficientEstimate::lower)
        .def_readonly("upper", &CoefficientEstimate::upper)
        .def_readonly("points_used", &CoefficientEstimate::points_used);

    m.def(
        "estimate_dimension",
        [](const std::vector<ErrorEntry>& entries) {
            return estimate_dimension(make_error_sequence(entries));
        },
        py::arg("entries"));
    m.def(
        "estimate_coefficient",
        [](const std::vector<ErrorEntry>& entries, double s) {
            return estimate_coefficient(make_error_sequence(entries), s);
        },
        py::arg("entries"), py::arg("s"));

    m.def("run_reference_cases", [] {
        py::list rows;
        for (const auto& r : run_reference_cases()) {
            py::dict d;
            d["name"] = r.name;
            d["computed"] = r.computed;
            d["expected"] = r.expected;
            d["pass"] = r.pass;
            rows.append(d);
        }
        return rows;
    });
}
