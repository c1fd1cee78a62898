#include "spherequant/frechet.hpp"

#include <algorithm>
#include <cmath>

namespace spherequant {

namespace {

void check_same_sphere(const DiscreteMeasure& mu, const SpherePoint& q) {
    if (std::abs(mu.rho() - q.rho) > 1e-12 * std::max(mu.rho(), q.rho))
        throw std::invalid_argument("query point radius does not match the measure");
}

}  // namespace

double frechet_functional(const DiscreteMeasure& mu, const SpherePoint& q, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("order r must be positive");
    check_same_sphere(mu, q);
    double f = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        f += mu.weights[i] * std::pow(geodesic_distance(mu.points[i], q), r);
    return f;
}

Vec3 log_map(const SpherePoint& a, const SpherePoint& x) {
    const double s = central_angle(a, x);
    if (s >= kPi - 1e-9) throw std::domain_error("log map undefined for antipodal points");
    if (s == 0.0) return {0.0, 0.0, 0.0};
    const Vec3 dir = (x.unit() - std::cos(s) * a.unit()) * (1.0 / std::sin(s));
    return (a.rho * s) * dir;
}

SpherePoint exp_map(const SpherePoint& a, const Vec3& v) {
    const double vn = v.norm();
    if (std::abs(v.dot(a.unit())) > 1e-9 * std::max(1.0, vn))
        throw std::invalid_argument("vector is not tangent at the base point");
    if (vn == 0.0) return a;
    const double t = vn / a.rho;
    const Vec3 r = std::cos(t) * a.vec() + (a.rho * std::sin(t)) * (v * (1.0 / vn));
    return SpherePoint::project(r, a.rho);  // v may be tangent only to 1e-9
}

MeanResult extrinsic_centroid(const DiscreteMeasure& mu) {
    Vec3 m{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < mu.size(); ++i) m = m + mu.weights[i] * mu.points[i].vec();
    MeanResult res;
    if (m.norm() <= 1e-12) {
        res.degenerate = true;
        return res;
    }
    res.point = SpherePoint::project(m, mu.rho());
    res.functional_value = frechet_functional(mu, *res.point, 2.0);
    res.converged = true;
    return res;
}

MeanResult intrinsic_mean(const DiscreteMeasure& mu, const SpherePoint& init,
                          const IntrinsicMeanOptions& opts) {
    check_same_sphere(mu, init);
    if (!(opts.step > 0.0 && opts.step <= 1.0)) throw std::invalid_argument("step out of (0, 1]");
    if (!(opts.tol > 0.0)) throw std::invalid_argument("tol must be positive");

    SpherePoint q = init;
    bool perturbed = false;
    MeanResult res;
    for (int it = 0; it < opts.max_iter; ++it) {
        Vec3 grad{0.0, 0.0, 0.0};
        bool antipodal = false;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (central_angle(q, mu.points[i]) >= kPi - 1e-9) { antipodal = true; break; }
            grad = grad + mu.weights[i] * log_map(q, mu.points[i]);
        }
        if (antipodal) {
            if (perturbed) throw std::domain_error("data point antipodal to the iterate");
            perturbed = true;
            q = exp_map(q, 1e-6 * antipodal_direction(q));
            continue;
        }
        res.iterations = it + 1;
        res.gradient_norm = grad.norm();
        if (res.gradient_norm <= opts.tol) {
            res.converged = true;
            break;
        }
        q = exp_map(q, opts.step * grad);
    }
    res.point = q;
    res.functional_value = frechet_functional(mu, q, 2.0);
    return res;
}

}  // namespace spherequant
