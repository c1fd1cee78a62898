#include "spherequant/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spherequant {

ErrorSequence make_error_sequence(std::vector<ErrorEntry> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].n < 1) throw std::invalid_argument("n must be >= 1");
        if (!(entries[i].r > 0.0)) throw std::invalid_argument("order r must be positive");
        if (entries[i].v < 0.0) throw std::invalid_argument("errors must be nonnegative");
        if (i > 0 && entries[i].n <= entries[i - 1].n)
            throw std::invalid_argument("n must be strictly increasing");
    }
    return ErrorSequence{std::move(entries)};
}

std::vector<std::string> ErrorSequence::warnings() const {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].v == 0.0)
            w.push_back("entry n=" + std::to_string(entries[i].n) +
                        " has zero error and is excluded from fits");
        if (i > 0 && entries[i].v > entries[i - 1].v)
            w.push_back("error increases from n=" + std::to_string(entries[i - 1].n) + " to n=" +
                        std::to_string(entries[i].n));
    }
    return w;
}

namespace {

std::vector<ErrorEntry> positive_entries(const ErrorSequence& seq, double& r_out) {
    std::vector<ErrorEntry> use;
    for (const auto& e : seq.entries)
        if (e.v > 0.0) use.push_back(e);
    if (use.size() < 3) throw std::invalid_argument("insufficient data: need >= 3 positive errors");
    r_out = use.front().r;
    for (const auto& e : use)
        if (e.r != r_out) throw std::invalid_argument("entries mix different orders r");
    return use;
}

}  // namespace

DimensionEstimate estimate_dimension(const ErrorSequence& seq) {
    double r = 0.0;
    const auto use = positive_entries(seq, r);
    const std::size_t k = use.size();

    double sx = 0.0, sy = 0.0;
    for (const auto& e : use) {
        sx += std::log(double(e.n));
        sy += -std::log(e.v);
    }
    const double mx = sx / k, my = sy / k;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& e : use) {
        const double dx = std::log(double(e.n)) - mx;
        const double dy = -std::log(e.v) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("degenerate fit: all n equal");
    const double slope = sxy / sxx;
    if (!(slope > 0.0)) throw std::invalid_argument("errors do not decay; dimension undefined");
    const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return DimensionEstimate{r / slope, slope, my - slope * mx, r2, int(k)};
}

CoefficientEstimate estimate_coefficient(const ErrorSequence& seq, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("dimension s must be positive");
    double r = 0.0;
    const auto use = positive_entries(seq, r);
    const std::size_t k = use.size();
    const std::size_t start = k - (k + 1) / 2;  // tail half as liminf/limsup proxy
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = start; i < k; ++i) {
        const double q = std::pow(double(use[i].n), r / s) * use[i].v;
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    return CoefficientEstimate{lo, hi, int(k - start)};
}

}  // namespace spherequant
