#pragma once

#include <vector>

#include "spherequant/geometry.hpp"

namespace spherequant {

enum class SupportKind { GreatCircle, SmallCircle, GreatArc };

/// Orthonormal pair spanning the plane of the support circle. The default
/// frame (e_x, e_y) puts great circles on the equator and small circles on
/// the parallel at the given latitude.
struct Frame {
    Vec3 e1{1.0, 0.0, 0.0};
    Vec3 e2{0.0, 1.0, 0.0};

    Vec3 axis() const { return e1.cross(e2); }
};

/// One-dimensional support on the sphere: great circle, small circle at a
/// fixed latitude, or great-circle arc. Points are addressed by arc length,
/// and the quantization metric on a support is arc length along the curve
/// (wrapped for circles). For small circles this is deliberately longer
/// than the ambient geodesic between the same points.
class CurveSupport {
  public:
    static CurveSupport great_circle(double rho = 1.0, const Frame& frame = {});
    static CurveSupport small_circle(double latitude, double rho = 1.0, const Frame& frame = {});
    static CurveSupport great_arc(double length, double rho = 1.0, const Frame& frame = {});

    SupportKind kind() const { return kind_; }
    double rho() const { return rho_; }
    double latitude() const { return latitude_; }
    const Frame& frame() const { return frame_; }
    bool is_circle() const { return kind_ != SupportKind::GreatArc; }

    /// Intrinsic length: 2*pi*rho, 2*pi*rho*cos(lat), or the stored arc length.
    double length() const { return length_; }

    /// Arc-length parameterization; s wraps modulo the length on circles and
    /// must lie in [0, L] on arcs.
    SpherePoint point_at(double s) const;

    /// Distance between two arc-length coordinates measured along the curve.
    double curve_distance(double s1, double s2) const;

    /// Arc-length coordinate of a point lying on the support (within
    /// 1e-9*rho); throws otherwise.
    double locate(const SpherePoint& p) const;

  private:
    CurveSupport(SupportKind kind, double rho, double latitude, double length, Frame frame);

    SupportKind kind_;
    double rho_;
    double latitude_;  // SmallCircle only
    double length_;
    Frame frame_;
};

/// Finitely many sphere points with positive weights summing to 1. Points
/// closer than 1e-12 in geodesic distance are merged at construction.
struct DiscreteMeasure {
    std::vector<SpherePoint> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
    double rho() const { return points.at(0).rho; }
};

DiscreteMeasure make_measure(std::vector<SpherePoint> points, std::vector<double> weights);

/// Measure pinned to a support: arc-length coordinates plus weights.
struct CurveMeasure {
    CurveSupport support;
    std::vector<double> arclen;
    std::vector<double> weights;

    std::size_t size() const { return arclen.size(); }
    DiscreteMeasure to_measure() const;
};

/// m equally spaced arc-length coordinates: k*L/m from 0 on circles,
/// midpoint grid (k+1/2)*L/m on arcs.
std::vector<double> sample_coords(const CurveSupport& c, int m);

DiscreteMeasure sample_equally_spaced(const CurveSupport& c, int m);
CurveMeasure sample_on_support(const CurveSupport& c, int m);

/// Pin an ambient measure to a support by locating every point on it.
CurveMeasure measure_on_support(const CurveSupport& c, const DiscreteMeasure& mu);

}  // namespace spherequant
