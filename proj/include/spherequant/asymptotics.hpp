#pragma once

#include <string>
#include <vector>

namespace spherequant {

struct ErrorEntry {
    long long n;
    double v;
    double r;
};

/// Sequence of quantization errors indexed by codebook size. n must be
/// strictly increasing; a non-increasing V is expected but only warned about
/// (noisy solvers may violate it).
struct ErrorSequence {
    std::vector<ErrorEntry> entries;

    std::vector<std::string> warnings() const;
};

ErrorSequence make_error_sequence(std::vector<ErrorEntry> entries);

struct DimensionEstimate {
    double dimension;   // r / slope of (log n, -log V)
    double slope;
    double intercept;
    double r_squared;   // fit quality; the limit itself cannot be certified
    int points_used;
};

/// Least-squares power-law fit; exact laws V = C n^(-r/s) recover s.
/// Zero-error entries are dropped (see ErrorSequence::warnings); fewer than
/// three usable entries is an error.
DimensionEstimate estimate_dimension(const ErrorSequence& seq);

struct CoefficientEstimate {
    double lower;  // min of n^(r/s) V over the tail half
    double upper;  // max over the same window
    int points_used;
};

CoefficientEstimate estimate_coefficient(const ErrorSequence& seq, double s);

}  // namespace spherequant
