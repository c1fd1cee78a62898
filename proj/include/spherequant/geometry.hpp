#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace spherequant {

inline constexpr double kPi = std::numbers::pi;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

/// Point constrained to the sphere of radius rho; the constructor rejects
/// coordinates whose squared norm deviates from rho^2 by more than 1e-12
/// relative.
struct SpherePoint {
    double x, y, z;
    double rho;

    SpherePoint(double x_, double y_, double z_, double rho_ = 1.0)
        : x(x_), y(y_), z(z_), rho(rho_) {
        if (!(rho > 0.0)) throw std::invalid_argument("sphere radius must be positive");
        const double n2 = x * x + y * y + z * z;
        if (std::abs(n2 - rho * rho) > 1e-12 * rho * rho)
            throw std::invalid_argument("point is not on the sphere of the given radius");
    }

    Vec3 vec() const { return {x, y, z}; }
    Vec3 unit() const { return {x / rho, y / rho, z / rho}; }

    /// Radial projection of an arbitrary nonzero vector onto the sphere.
    static SpherePoint project(const Vec3& v, double rho) {
        const Vec3 u = v.normalized();
        return SpherePoint(rho * u.x, rho * u.y, rho * u.z, rho);
    }

    bool same_rep(const SpherePoint& o) const {
        return x == o.x && y == o.y && z == o.z && rho == o.rho;
    }
};

/// Geographic coordinates: latitude in [-pi/2, pi/2], longitude in (-pi, pi].
struct GeoCoord {
    double lat;
    double lon;
};

/// Spherical-coordinate convention: colatitude in [0, pi], longitude in [0, 2pi).
struct SphCoord {
    double colat;
    double lon;
};

struct GeoFromCartesian {
    GeoCoord geo;
    bool pole_degenerate;  // longitude conventionally 0 at the poles
};

void validate_geo(const GeoCoord& g);
void validate_sph(const SphCoord& s);

SphCoord geo_to_sph(const GeoCoord& g);
GeoCoord sph_to_geo(const SphCoord& s);

SpherePoint geo_to_cartesian(const GeoCoord& g, double rho);
SpherePoint sph_to_cartesian(const SphCoord& s, double rho);
GeoFromCartesian cartesian_to_geo(const SpherePoint& p);

/// Shorter great-circle arc length between two points on the same sphere,
/// rho * arccos(<p1,p2>/rho^2) with the cosine clamped to [-1, 1].
double geodesic_distance(const SpherePoint& p1, const SpherePoint& p2);

/// Central angle in [0, pi] subtended by the two points.
double central_angle(const SpherePoint& p1, const SpherePoint& p2);

/// Constant-speed geodesic interpolation between two points of equal radius.
/// tau=0 gives a, tau=1 gives b. Coincident endpoints give the constant
/// curve; antiparallel endpoints follow a deterministically chosen
/// semicircle (see antipodal_direction).
SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double tau);

/// Unit vector orthogonal to a used for the antiparallel slerp branch:
/// the coordinate axis least aligned with a, orthogonalized and normalized.
Vec3 antipodal_direction(const SpherePoint& a);

/// Length of a parametric curve on the sphere by composite midpoint
/// quadrature of the finite-difference speed.
double curve_arclength(const std::function<SpherePoint(double)>& curve, double a, double b,
                       int quad_points);

}  // namespace spherequant
