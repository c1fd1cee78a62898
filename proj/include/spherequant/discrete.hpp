#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "spherequant/support.hpp"

namespace spherequant {

struct Codebook {
    std::vector<SpherePoint> codepoints;
    double order = 2.0;
};

struct VoronoiPartition {
    std::vector<int> assignment;
    std::vector<double> cluster_mass;
};

enum class CentroidMode { Extrinsic, Intrinsic };

/// Chordal is an experimental alternative; all closed forms and tests target
/// the geodesic metric.
enum class PointMetric { Geodesic, Chordal };

enum class CandidateMode { DataPoints, BlockCenters };

struct LloydOptions {
    int n = 1;
    CentroidMode mode = CentroidMode::Extrinsic;
    std::uint64_t seed = 0;
    double tol = 1e-12;
    int max_iter = 200;
    PointMetric metric = PointMetric::Geodesic;
    std::optional<Codebook> init;  // overrides the seeded initialization
};

struct QuantizationResult {
    Codebook codebook;
    VoronoiPartition partition;
    double distortion = 0.0;
    int iterations = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    std::vector<double> distortion_history;  // value after each assign+update pair
};

/// Nearest-codepoint assignment; ties go to the lowest codepoint index.
VoronoiPartition voronoi_assign(const DiscreteMeasure& mu, const Codebook& cb,
                                PointMetric metric = PointMetric::Geodesic);

/// Sum of p_i * min_j d(x_i, a_j)^r with r taken from the codebook.
double distortion(const DiscreteMeasure& mu, const Codebook& cb,
                  PointMetric metric = PointMetric::Geodesic);

/// Alternating assignment / centroid update for squared distortion. Centroid
/// updates are guarded (kept only if the cluster cost does not increase), so
/// the recorded distortion history is non-increasing for any input. With
/// n >= m every data point becomes a codepoint and the distortion is 0.
QuantizationResult lloyd(const DiscreteMeasure& mu, const LloydOptions& opts);

/// Best of `restarts` runs with seeds opts.seed, opts.seed+1, ...
QuantizationResult lloyd_best_of(const DiscreteMeasure& mu, LloydOptions opts, int restarts);

/// Weighted mean of sorted arc-length coordinates: the 1-D stationary point
/// of the squared-distance block cost. For equally spaced points of equal
/// weight this is the block's geodesic midpoint (the central data point when
/// the block has odd cardinality).
double block_center(std::span<const double> arclen, std::span<const double> weights);

/// Exact optimal contiguous clustering of an ordered measure on a great arc
/// (squared curve distance), by dynamic programming over prefix sums.
QuantizationResult contiguous_dp(const CurveMeasure& mu, int n);

/// Exact optimum over circularly contiguous clusterings of a measure on a
/// circle support: best linearization cut for n >= 2, exact wrapped
/// single-center solve for n = 1.
QuantizationResult circular_contiguous_dp(const CurveMeasure& mu, int n);

/// Exhaustive search over all partitions into at most n clusters (m <= 12,
/// n <= 4). Cluster representatives are chosen per candidate_mode: the best
/// of the cluster's own data points, or the optimal center (extrinsic mean
/// for ambient measures, weighted 1-D mean on supports).
QuantizationResult brute_force_optimal(const DiscreteMeasure& mu, int n, CandidateMode mode);
QuantizationResult brute_force_optimal(const CurveMeasure& mu, int n, CandidateMode mode);

}  // namespace spherequant
