#include "spherequant/continuous.hpp"

#include <algorithm>
#include <cmath>

namespace spherequant {

double closed_form_error(double L, int n, double r) {
    if (!(L > 0.0)) throw std::invalid_argument("length must be positive");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(r >= 1.0)) throw std::invalid_argument("order r must be >= 1 (midpoints are optimal only there)");
    if (r == 2.0) return L * L / (12.0 * double(n) * double(n));
    return std::pow(L, r) / ((r + 1.0) * std::pow(2.0, r) * std::pow(double(n), r));
}

double cell_conditional_error(double h, double r) {
    if (!(h > 0.0)) throw std::invalid_argument("cell length must be positive");
    if (!(r >= 1.0)) throw std::invalid_argument("order r must be >= 1");
    if (r == 2.0) return h * h / 12.0;
    return std::pow(h, r) / ((r + 1.0) * std::pow(2.0, r));
}

double exchange_gradient(double h1, double h2) {
    if (!(h1 > 0.0 && h2 > 0.0)) throw std::invalid_argument("cell lengths must be positive");
    return (h1 - h2) / 6.0;
}

ContinuousSolution optimal_uniform(const CurveSupport& support, int n, double r) {
    const double L = support.length();
    ContinuousSolution sol{support, n, r, {}, {}, closed_form_error(L, n, r)};
    const double h = L / n;
    sol.codepoints_arclen.reserve(n);
    if (support.is_circle()) {
        for (int k = 0; k < n; ++k) sol.codepoints_arclen.push_back(k * h);
        for (int k = 0; k < n; ++k) sol.cell_boundaries_arclen.push_back((k + 0.5) * h);
    } else {
        for (int k = 0; k < n; ++k) sol.codepoints_arclen.push_back((k + 0.5) * h);
        for (int k = 0; k <= n; ++k) sol.cell_boundaries_arclen.push_back(k * h);
    }
    return sol;
}

namespace {

// integral of u^r over [0, len] by the composite midpoint rule
double half_cell_integral(double len, double r, int nodes) {
    if (len <= 0.0) return 0.0;
    const double d = len / nodes;
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) acc += std::pow((i + 0.5) * d, r) * d;
    return acc;
}

}  // namespace

double numeric_distortion(const CurveSupport& support, std::vector<double> codepoints_arclen,
                          double r, int quad_points) {
    if (codepoints_arclen.empty()) throw std::invalid_argument("codebook is empty");
    if (!(r > 0.0)) throw std::invalid_argument("order r must be positive");
    if (quad_points < 16) throw std::invalid_argument("quad_points must be >= 16");
    const double L = support.length();

    auto& cps = codepoints_arclen;
    if (support.is_circle()) {
        for (double& c : cps) {
            c = std::fmod(c, L);
            if (c < 0.0) c += L;
        }
    } else {
        for (double c : cps)
            if (c < -1e-9 || c > L + 1e-9)
                throw std::invalid_argument("codepoint outside the arc");
    }
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());

    // Decompose the support into half-cells (codepoint to Voronoi boundary);
    // on each, the distance to the nearest codepoint is just the offset.
    std::vector<double> half_lengths;
    if (support.is_circle()) {
        const std::size_t n = cps.size();
        for (std::size_t k = 0; k < n; ++k) {
            double gap = (k + 1 < n ? cps[k + 1] : cps[0] + L) - cps[k];
            half_lengths.push_back(gap / 2.0);
            half_lengths.push_back(gap / 2.0);
        }
    } else {
        half_lengths.push_back(cps.front() - 0.0);
        for (std::size_t k = 0; k + 1 < cps.size(); ++k) {
            const double gap = cps[k + 1] - cps[k];
            half_lengths.push_back(gap / 2.0);
            half_lengths.push_back(gap / 2.0);
        }
        half_lengths.push_back(L - cps.back());
    }

    double total = 0.0;
    for (double len : half_lengths) {
        const int nodes = std::max(1, int(std::llround(quad_points * (len / L))));
        total += half_cell_integral(len, r, nodes);
    }
    return total / L;
}

}  // namespace spherequant
