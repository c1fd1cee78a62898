#pragma once

#include <optional>

#include "spherequant/support.hpp"

namespace spherequant {

/// Outcome of a mean computation. `point` is empty exactly when `degenerate`
/// is set by the extrinsic rule (vanishing Euclidean mean). The intrinsic
/// solver never reports degeneracy; for measures with a non-unique mean it
/// returns whichever stationary point the iteration reaches from its init.
struct MeanResult {
    std::optional<SpherePoint> point;
    double functional_value = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    bool degenerate = false;
};

/// Sum of p_i * d_G(x_i, q)^r.
double frechet_functional(const DiscreteMeasure& mu, const SpherePoint& q, double r);

/// Riemannian logarithm at a: tangent vector of length d_G(a, x) pointing
/// toward x. Undefined for antipodal x (central angle >= pi - 1e-9).
Vec3 log_map(const SpherePoint& a, const SpherePoint& x);

/// Riemannian exponential at a of a tangent vector v (requires <v, a> = 0
/// within 1e-9): the point at geodesic distance |v| from a along v.
SpherePoint exp_map(const SpherePoint& a, const Vec3& v);

/// Weighted Euclidean mean radially projected to the sphere; degenerate when
/// the mean vanishes (norm <= 1e-12), e.g. for an equal-weight antipodal pair.
MeanResult extrinsic_centroid(const DiscreteMeasure& mu);

struct IntrinsicMeanOptions {
    double step = 1.0;
    double tol = 1e-10;
    int max_iter = 10000;
};

/// Karcher iteration q <- exp_q(step * sum_i p_i log_q(x_i)) from the given
/// init until the gradient norm drops below tol. A data point antipodal to
/// an iterate triggers one deterministic 1e-6 perturbation of the iterate;
/// a second encounter throws.
MeanResult intrinsic_mean(const DiscreteMeasure& mu, const SpherePoint& init,
                          const IntrinsicMeanOptions& opts = {});

}  // namespace spherequant
