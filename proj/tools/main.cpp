#include <algorithm>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "spherequant/asymptotics.hpp"
#include "spherequant/continuous.hpp"
#include "spherequant/discrete.hpp"
#include "spherequant/io.hpp"
#include "spherequant/reference_cases.hpp"

namespace {

using namespace spherequant;

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct SupportFlags {
    bool great_circle = false;
    bool small_circle = false;
    bool arc = false;
    double lat = 0.0;
    double length = 0.0;
    double rho = 1.0;
    bool degrees = false;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--great-circle", great_circle, "uniform support: great circle");
        cmd->add_flag("--small-circle", small_circle, "uniform support: small circle at --lat");
        cmd->add_flag("--arc", arc, "uniform support: great-circle arc of --length");
        cmd->add_option("--lat", lat, "small-circle latitude (radians unless --degrees)");
        cmd->add_option("--length", length, "arc length (angle along the great circle)");
        cmd->add_option("--rho", rho, "sphere radius")->default_val(1.0);
        cmd->add_flag("--degrees", degrees, "interpret --lat and --length as degrees");
    }

    CurveSupport build() const {
        const int kinds = int(great_circle) + int(small_circle) + int(arc);
        if (kinds != 1)
            throw CLI::ValidationError(
                "support", "choose exactly one of --great-circle, --small-circle, --arc");
        const double to_rad = degrees ? kPi / 180.0 : 1.0;
        if (great_circle) return CurveSupport::great_circle(rho);
        if (small_circle) return CurveSupport::small_circle(lat * to_rad, rho);
        return CurveSupport::great_arc(length * to_rad * rho, rho);
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

int cmd_closed_form(const SupportFlags& sf, int n, int n_max, double r, const std::string& out) {
    const auto support = sf.build();
    if (n_max < n) n_max = n;
    std::string csv = "n,L,V_n\n";
    for (int k = n; k <= n_max; ++k)
        csv += std::to_string(k) + "," + fmt12(support.length()) + "," +
               fmt12(closed_form_error(support.length(), k, r)) + "\n";
    emit(csv, out);
    return 0;
}

int cmd_sample(const SupportFlags& sf, int m, const std::string& out) {
    const auto mu = sample_equally_spaced(sf.build(), m);
    emit(measure_to_json(mu).dump(2) + "\n", out);
    return 0;
}

int cmd_lloyd(const std::string& in, const LloydOptions& opts, int restarts, bool strict,
              const std::string& out) {
    const auto mu = measure_from_json(nlohmann::json::parse(read_text_file(in)));
    const auto res = restarts > 1 ? lloyd_best_of(mu, opts, restarts) : lloyd(mu, opts);
    if (!out.empty()) write_text_file(out, result_to_json(res, mu.rho()).dump(2) + "\n");
    std::cout << "distortion = " << fmt12(res.distortion) << "\n"
              << "iterations = " << res.iterations << "\n"
              << "converged = " << (res.converged ? "true" : "false") << "\n"
              << "seed = " << res.seed << "\n";
    if (strict && !res.converged) return 2;
    return 0;
}

int cmd_contiguous(const std::string& in, const SupportFlags& sf, int n, const std::string& out) {
    const auto support = sf.build();
    const auto mu = measure_from_json(nlohmann::json::parse(read_text_file(in)));
    auto cm = measure_on_support(support, mu);

    std::vector<std::size_t> order(cm.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cm.arclen[a] < cm.arclen[b]; });
    CurveMeasure sorted{cm.support, {}, {}};
    for (std::size_t i : order) {
        sorted.arclen.push_back(cm.arclen[i]);
        sorted.weights.push_back(cm.weights[i]);
    }

    const auto res =
        support.is_circle() ? circular_contiguous_dp(sorted, n) : contiguous_dp(sorted, n);
    if (!out.empty()) write_text_file(out, result_to_json(res, mu.rho()).dump(2) + "\n");
    std::cout << "distortion = " << fmt12(res.distortion) << "\n"
              << "clusters = " << res.codebook.codepoints.size() << "\n";
    return 0;
}

int cmd_examples() {
    const auto rows = run_reference_cases();
    bool all = true;
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    for (const auto& r : rows) {
        all = all && r.pass;
        std::printf("%-*s  computed %-18s expected %-18s %s%s%s\n", int(width), r.name.c_str(),
                    fmt12(r.computed).c_str(), fmt12(r.expected).c_str(),
                    r.pass ? "PASS" : "FAIL", r.note.empty() ? "" : "  # ", r.note.c_str());
    }
    std::printf("%s: %zu/%zu checks passed\n", all ? "OK" : "FAILED",
                std::size_t(std::count_if(rows.begin(), rows.end(),
                                          [](const auto& r) { return r.pass; })),
                rows.size());
    return all ? 0 : 1;
}

int cmd_dimension(const std::string& in, double s_opt, double default_r) {
    const auto seq = error_sequence_from_csv(read_text_file(in), default_r);
    for (const auto& w : seq.warnings()) std::cerr << "warning: " << w << "\n";
    const auto dim = estimate_dimension(seq);
    const double s = s_opt > 0.0 ? s_opt : dim.dimension;
    const auto coeff = estimate_coefficient(seq, s);
    std::cout << "dimension = " << fmt12(dim.dimension) << "\n"
              << "r_squared = " << fmt12(dim.r_squared) << "\n"
              << "coefficient window (s = " << fmt12(s) << ") = [" << fmt12(coeff.lower) << ", "
              << fmt12(coeff.upper) << "]\n"
              << "points used = " << dim.points_used << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intrinsic quantization of measures on spheres and spherical curves"};
    app.require_subcommand(1);

    // closed-form
    SupportFlags cf_sf;
    int cf_n = 1, cf_n_max = 0;
    double cf_r = 2.0;
    std::string cf_out;
    auto* cf = app.add_subcommand("closed-form", "optimal uniform quantization error table");
    cf_sf.attach(cf);
    cf->add_option("--n", cf_n, "codebook size (table start)")->required();
    cf->add_option("--n-max", cf_n_max, "table end (inclusive)");
    cf->add_option("--r", cf_r, "distortion order (>= 1)")->default_val(2.0);
    cf->add_option("--output", cf_out, "write CSV here instead of stdout");

    // sample
    SupportFlags sm_sf;
    int sm_m = 1;
    std::string sm_out;
    auto* sm = app.add_subcommand("sample", "emit m equally spaced points as a measure JSON");
    sm_sf.attach(sm);
    sm->add_option("--m", sm_m, "number of points")->required();
    sm->add_option("--output", sm_out, "write JSON here instead of stdout");

    // lloyd
    std::string ll_in, ll_out, ll_mode = "extrinsic", ll_metric = "geodesic";
    LloydOptions ll_opts;
    int ll_restarts = 1;
    bool ll_strict = false;
    auto* ll = app.add_subcommand("lloyd", "alternating assignment / centroid solver");
    ll->add_option("--input", ll_in, "measure JSON")->required();
    ll->add_option("--n", ll_opts.n, "codebook size")->required();
    ll->add_option("--mode", ll_mode, "centroid update: extrinsic | intrinsic");
    ll->add_option("--metric", ll_metric, "point metric: geodesic | chordal (experimental)");
    ll->add_option("--seed", ll_opts.seed, "PRNG seed");
    ll->add_option("--restarts", ll_restarts, "independent seeded runs, best kept");
    ll->add_option("--tol", ll_opts.tol, "relative distortion-change stop");
    ll->add_option("--max-iter", ll_opts.max_iter, "iteration cap");
    ll->add_flag("--strict", ll_strict, "exit 2 when the solver does not converge");
    ll->add_option("--output", ll_out, "write result JSON here");

    // contiguous
    std::string ct_in, ct_out;
    SupportFlags ct_sf;
    int ct_n = 1;
    auto* ct = app.add_subcommand("contiguous",
                                  "exact contiguous clustering of a measure on a support");
    ct->add_option("--input", ct_in, "measure JSON (points must lie on the support)")->required();
    ct_sf.attach(ct);
    ct->add_option("--n", ct_n, "number of clusters")->required();
    ct->add_option("--output", ct_out, "write result JSON here");

    // examples
    app.add_subcommand("examples", "run the built-in reference cases and report pass/fail");

    // dimension
    std::string dm_in;
    double dm_s = 0.0, dm_r = 2.0;
    auto* dm = app.add_subcommand("dimension", "power-law fit of an error sequence CSV");
    dm->add_option("--input", dm_in, "CSV with header n,V[,r] or n,L,V_n")->required();
    dm->add_option("--s", dm_s, "dimension for the coefficient window (default: fitted)");
    dm->add_option("--r", dm_r, "distortion order when the CSV has no r column")->default_val(2.0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cf->parsed()) return cmd_closed_form(cf_sf, cf_n, cf_n_max, cf_r, cf_out);
        if (sm->parsed()) return cmd_sample(sm_sf, sm_m, sm_out);
        if (ll->parsed()) {
            if (ll_mode == "intrinsic") ll_opts.mode = CentroidMode::Intrinsic;
            else if (ll_mode != "extrinsic") throw CLI::ValidationError("--mode", "unknown mode");
            if (ll_metric == "chordal") ll_opts.metric = PointMetric::Chordal;
            else if (ll_metric != "geodesic")
                throw CLI::ValidationError("--metric", "unknown metric");
            return cmd_lloyd(ll_in, ll_opts, ll_restarts, ll_strict, ll_out);
        }
        if (ct->parsed()) return cmd_contiguous(ct_in, ct_sf, ct_n, ct_out);
        if (app.get_subcommand("examples")->parsed()) return cmd_examples();
        if (dm->parsed()) return cmd_dimension(dm_in, dm_s, dm_r);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
