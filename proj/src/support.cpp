#include "spherequant/support.hpp"

#include <algorithm>
#include <utility>

namespace spherequant {

namespace {

void validate_frame(const Frame& f) {
    if (std::abs(f.e1.norm2() - 1.0) > 1e-12 || std::abs(f.e2.norm2() - 1.0) > 1e-12 ||
        std::abs(f.e1.dot(f.e2)) > 1e-12)
        throw std::invalid_argument("frame vectors must be orthonormal");
}

double wrap_positive(double s, double period) {
    double r = std::fmod(s, period);
    if (r < 0.0) r += period;
    return r;
}

}  // namespace

CurveSupport::CurveSupport(SupportKind kind, double rho, double latitude, double length,
                           Frame frame)
    : kind_(kind), rho_(rho), latitude_(latitude), length_(length), frame_(frame) {}

CurveSupport CurveSupport::great_circle(double rho, const Frame& frame) {
    if (!(rho > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    validate_frame(frame);
    return CurveSupport(SupportKind::GreatCircle, rho, 0.0, 2 * kPi * rho, frame);
}

CurveSupport CurveSupport::small_circle(double latitude, double rho, const Frame& frame) {
    if (!(rho > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    if (!(latitude > -kPi / 2 && latitude < kPi / 2))
        throw std::invalid_argument("small-circle latitude out of (-pi/2, pi/2)");
    validate_frame(frame);
    return CurveSupport(SupportKind::SmallCircle, rho, latitude, 2 * kPi * rho * std::cos(latitude),
                        frame);
}

CurveSupport CurveSupport::great_arc(double length, double rho, const Frame& frame) {
    if (!(rho > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    if (!(length > 0.0 && length <= 2 * kPi * rho))
        throw std::invalid_argument("arc length out of (0, 2*pi*rho]");
    validate_frame(frame);
    return CurveSupport(SupportKind::GreatArc, rho, 0.0, length, frame);
}

SpherePoint CurveSupport::point_at(double s) const {
    if (kind_ == SupportKind::GreatArc) {
        const double tol = 1e-9 * rho_;
        if (s < -tol || s > length_ + tol) throw std::invalid_argument("arc coordinate out of [0, L]");
        s = std::clamp(s, 0.0, length_);
    } else {
        s = wrap_positive(s, length_);
    }
    const double circle_radius = kind_ == SupportKind::SmallCircle ? rho_ * std::cos(latitude_) : rho_;
    const double theta = s / circle_radius;
    const double offset = kind_ == SupportKind::SmallCircle ? rho_ * std::sin(latitude_) : 0.0;
    const Vec3 p = circle_radius * (std::cos(theta) * frame_.e1 + std::sin(theta) * frame_.e2) +
                   offset * frame_.axis();
    return SpherePoint(p.x, p.y, p.z, rho_);
}

double CurveSupport::curve_distance(double s1, double s2) const {
    if (kind_ == SupportKind::GreatArc) return std::abs(s1 - s2);
    const double d = wrap_positive(std::abs(s1 - s2), length_);
    return std::min(d, length_ - d);
}

double CurveSupport::locate(const SpherePoint& p) const {
    if (std::abs(p.rho - rho_) > 1e-12 * std::max(p.rho, rho_))
        throw std::invalid_argument("point radius does not match the support");
    const double circle_radius = kind_ == SupportKind::SmallCircle ? rho_ * std::cos(latitude_) : rho_;
    const double offset = kind_ == SupportKind::SmallCircle ? rho_ * std::sin(latitude_) : 0.0;
    const Vec3 w = p.vec() - offset * frame_.axis();
    const double u1 = w.dot(frame_.e1);
    const double u2 = w.dot(frame_.e2);
    if (u1 == 0.0 && u2 == 0.0) throw std::invalid_argument("point is not on the support");
    double theta = std::atan2(u2, u1);
    if (theta < 0.0) theta += 2 * kPi;
    double s = theta * circle_radius;
    const double tol = 1e-9 * rho_;
    if (kind_ != SupportKind::GreatArc && s >= length_) s = 0.0;
    if (kind_ == SupportKind::GreatArc) {
        const double full = 2 * kPi * circle_radius;
        if (s > length_ + tol && s >= full - tol) s = 0.0;
        if (s < 0.0 || s > length_ + tol) throw std::invalid_argument("point is not on the arc");
        s = std::clamp(s, 0.0, length_);
    }
    if ((point_at(s).vec() - p.vec()).norm() > tol)
        throw std::invalid_argument("point is not on the support");
    return s;
}

DiscreteMeasure make_measure(std::vector<SpherePoint> points, std::vector<double> weights) {
    if (points.empty()) throw std::invalid_argument("measure needs at least one point");
    if (points.size() != weights.size())
        throw std::invalid_argument("points and weights differ in length");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
    for (const auto& p : points)
        if (std::abs(p.rho - points[0].rho) > 1e-12 * points[0].rho)
            throw std::invalid_argument("all points must share one radius");

    // merge duplicates (geodesic distance <= 1e-12)
    DiscreteMeasure mu;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool merged = false;
        for (std::size_t j = 0; j < mu.points.size(); ++j) {
            if (geodesic_distance(points[i], mu.points[j]) <= 1e-12) {
                mu.weights[j] += weights[i];
                merged = true;
                break;
            }
        }
        if (!merged) {
            mu.points.push_back(points[i]);
            mu.weights.push_back(weights[i]);
        }
    }

    double sum = 0.0;
    for (double w : mu.weights) sum += w;
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");
    return mu;
}

std::vector<double> sample_coords(const CurveSupport& c, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const double h = c.length() / m;
    std::vector<double> s(m);
    for (int k = 0; k < m; ++k) s[k] = c.is_circle() ? k * h : (k + 0.5) * h;
    return s;
}

namespace {

std::vector<double> uniform_weights(int m) {
    std::vector<double> w(m, 1.0 / m);
    if (m >= 2) {
        double partial = 0.0;
        for (int i = 0; i + 1 < m; ++i) partial += w[i];
        w[m - 1] = 1.0 - partial;  // exact: partial is in [0.5, 1)
    }
    return w;
}

}  // namespace

DiscreteMeasure sample_equally_spaced(const CurveSupport& c, int m) {
    const auto coords = sample_coords(c, m);
    std::vector<SpherePoint> pts;
    pts.reserve(coords.size());
    for (double s : coords) pts.push_back(c.point_at(s));
    return make_measure(std::move(pts), uniform_weights(m));
}

CurveMeasure sample_on_support(const CurveSupport& c, int m) {
    return CurveMeasure{c, sample_coords(c, m), uniform_weights(m)};
}

CurveMeasure measure_on_support(const CurveSupport& c, const DiscreteMeasure& mu) {
    CurveMeasure cm{c, {}, mu.weights};
    cm.arclen.reserve(mu.size());
    for (const auto& p : mu.points) cm.arclen.push_back(c.locate(p));
    return cm;
}

DiscreteMeasure CurveMeasure::to_measure() const {
    std::vector<SpherePoint> pts;
    pts.reserve(arclen.size());
    for (double s : arclen) pts.push_back(support.point_at(s));
    return make_measure(std::move(pts), weights);
}

}  // namespace spherequant
