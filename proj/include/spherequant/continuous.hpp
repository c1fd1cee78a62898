#pragma once

#include <vector>

#include "spherequant/support.hpp"

namespace spherequant {

/// Closed-form optimal n-point solution for the uniform measure on a
/// support: equal cells of length L/n with midpoint codepoints. On circles
/// the first codepoint is pinned at s = 0 (any rotation is optimal); on arcs
/// the codepoints sit at (k+1/2)*L/n.
struct ContinuousSolution {
    CurveSupport support;
    int n;
    double order;
    std::vector<double> codepoints_arclen;
    std::vector<double> cell_boundaries_arclen;
    double error;
};

ContinuousSolution optimal_uniform(const CurveSupport& support, int n, double r = 2.0);

/// Optimal error of the uniform measure on a length-L segment or circle:
/// L^2/(12 n^2) for r = 2, L^r/((r+1) 2^r n^r) for general r >= 1.
double closed_form_error(double L, int n, double r = 2.0);

/// Conditional error of one cell of length h under a midpoint codepoint:
/// h^2/12 for r = 2, h^r/((r+1) 2^r) in general.
double cell_conditional_error(double h, double r = 2.0);

/// Numeric distortion of an arbitrary codebook (arc-length coordinates)
/// against the uniform density on the support, using the curve metric and
/// composite midpoint quadrature on each smooth piece.
double numeric_distortion(const CurveSupport& support, std::vector<double> codepoints_arclen,
                          double r, int quad_points);

/// First-order cost change (h1 - h2)/6 per unit of boundary shift between
/// adjacent cells of lengths h1 and h2; positive iff the first cell is
/// longer.
double exchange_gradient(double h1, double h2);

}  // namespace spherequant
