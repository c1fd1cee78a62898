#include "spherequant/geometry.hpp"

#include <algorithm>

namespace spherequant {

namespace {

double clamp_cos(double c) { return std::clamp(c, -1.0, 1.0); }

void check_same_radius(const SpherePoint& p1, const SpherePoint& p2) {
    if (std::abs(p1.rho - p2.rho) > 1e-12 * std::max(p1.rho, p2.rho))
        throw std::invalid_argument("points lie on spheres of different radii");
}

}  // namespace

void validate_geo(const GeoCoord& g) {
    if (!(g.lat >= -kPi / 2 && g.lat <= kPi / 2))
        throw std::invalid_argument("latitude out of [-pi/2, pi/2]");
    if (!(g.lon > -kPi && g.lon <= kPi))
        throw std::invalid_argument("longitude out of (-pi, pi]");
}

void validate_sph(const SphCoord& s) {
    if (!(s.colat >= 0.0 && s.colat <= kPi))
        throw std::invalid_argument("colatitude out of [0, pi]");
    if (!(s.lon >= 0.0 && s.lon < 2 * kPi))
        throw std::invalid_argument("longitude out of [0, 2pi)");
}

SphCoord geo_to_sph(const GeoCoord& g) {
    validate_geo(g);
    const double lon = g.lon < 0.0 ? g.lon + 2 * kPi : g.lon;
    return {kPi / 2 - g.lat, lon < 2 * kPi ? lon : 0.0};
}

GeoCoord sph_to_geo(const SphCoord& s) {
    validate_sph(s);
    const double lon = s.lon > kPi ? s.lon - 2 * kPi : s.lon;
    return {kPi / 2 - s.colat, lon};
}

SpherePoint geo_to_cartesian(const GeoCoord& g, double rho) {
    validate_geo(g);
    if (!(rho > 0.0)) throw std::invalid_argument("sphere radius must be positive");
    const double cl = std::cos(g.lat);
    return SpherePoint(rho * cl * std::cos(g.lon), rho * cl * std::sin(g.lon),
                       rho * std::sin(g.lat), rho);
}

SpherePoint sph_to_cartesian(const SphCoord& s, double rho) {
    return geo_to_cartesian(sph_to_geo(s), rho);
}

GeoFromCartesian cartesian_to_geo(const SpherePoint& p) {
    const double lat = std::asin(clamp_cos(p.z / p.rho));
    if (std::hypot(p.x, p.y) == 0.0) return {{lat, 0.0}, true};
    double lon = std::atan2(p.y, p.x);
    if (lon <= -kPi) lon = kPi;  // atan2(-0.0, x<0) returns -pi; keep (-pi, pi]
    return {{lat, lon}, false};
}

double geodesic_distance(const SpherePoint& p1, const SpherePoint& p2) {
    check_same_radius(p1, p2);
    if (p1.same_rep(p2)) return 0.0;
    return p1.rho * std::acos(clamp_cos(p1.vec().dot(p2.vec()) / (p1.rho * p2.rho)));
}

double central_angle(const SpherePoint& p1, const SpherePoint& p2) {
    return geodesic_distance(p1, p2) / p1.rho;
}

Vec3 antipodal_direction(const SpherePoint& a) {
    const Vec3 u = a.unit();
    // axis least aligned with u
    Vec3 axis{1.0, 0.0, 0.0};
    double best = std::abs(u.x);
    if (std::abs(u.y) < best) { axis = {0.0, 1.0, 0.0}; best = std::abs(u.y); }
    if (std::abs(u.z) < best) { axis = {0.0, 0.0, 1.0}; }
    return (axis - u * axis.dot(u)).normalized();
}

SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double tau) {
    check_same_radius(a, b);
    if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau out of [0, 1]");
    const double s = central_angle(a, b);
    const double sin_s = std::sin(s);
    if (sin_s < 1e-9) {
        if (s > kPi / 2) {
            // antiparallel (or nearly so): follow a fixed semicircle
            const Vec3 u = a.unit();
            const Vec3 e2 = antipodal_direction(a);
            const Vec3 r = a.rho * (std::cos(kPi * tau) * u + std::sin(kPi * tau) * e2);
            return SpherePoint(r.x, r.y, r.z, a.rho);
        }
        return a;  // coincident endpoints: constant curve
    }
    const double ca = std::sin((1.0 - tau) * s) / sin_s;
    const double cb = std::sin(tau * s) / sin_s;
    return SpherePoint(ca * a.x + cb * b.x, ca * a.y + cb * b.y, ca * a.z + cb * b.z, a.rho);
}

double curve_arclength(const std::function<SpherePoint(double)>& curve, double a, double b,
                       int quad_points) {
    if (quad_points < 2) throw std::invalid_argument("quad_points must be >= 2");
    if (b < a) throw std::invalid_argument("invalid parameter interval");
    if (b == a) return 0.0;
    const double dt = (b - a) / quad_points;
    const double h = std::max(1e-9, (b - a) * 1e-6);
    double length = 0.0;
    for (int k = 0; k < quad_points; ++k) {
        const double t = a + (k + 0.5) * dt;
        const Vec3 fwd = curve(t + h).vec();
        const Vec3 bwd = curve(t - h).vec();
        length += (fwd - bwd).norm() / (2.0 * h) * dt;
    }
    return length;
}

}  // namespace spherequant
