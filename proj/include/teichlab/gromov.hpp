#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "teichlab/metric_sample.hpp"

namespace teichlab {

// Gromov product <x|y> at `base`: half of d(b,x) + d(b,y) - d(x,y).
double gromov_product(const MetricSample& sample, std::size_t x, std::size_t y, std::size_t base);

struct DeltaOptions {
    std::size_t exact_cutoff = 300;   // full O(n^4) scan up to this many points
    std::size_t sample_points = 120;  // subsample size beyond the cutoff
    std::uint64_t seed = 1729;
};

struct DeltaReport {
    double delta = 0.0;
    std::array<std::size_t, 4> witness{0, 0, 0, 0};  // base, x, y, z realizing delta
    std::size_t points_used = 0;
    std::size_t points_total = 0;
    bool exhaustive = true;  // false when the scan ran on a subsample
};

// Smallest delta with <x|z> >= min(<x|y>, <y|z>) - delta over all basepoints
// and ordered triples.  Beyond the cutoff the scan runs on a deterministic
// subsample, whose delta is a lower bound for the full value.
DeltaReport delta_four_point(const MetricSample& sample, const DeltaOptions& opts = {});

// Re-evaluates the defect of a witness quadruple with the same arithmetic;
// replaying a report's witness reproduces its delta bit for bit.
double replay_delta(const MetricSample& sample, const std::array<std::size_t, 4>& witness);

struct NarrowReport {
    bool within = true;
    double worst_offset = 0.0;
    std::size_t worst_side = 0, worst_index = 0;
};

// Checks that every sample on every side of a polygon lies within `bound` of
// the union of the other sides.
NarrowReport narrow_polygon_check(const MetricSample& sample,
                                  const std::vector<std::vector<std::size_t>>& sides,
                                  double bound);

struct SandwichReport {
    double product = 0.0;
    double dist_to_geodesic = 0.0;
    double lower_slack = 0.0;  // dist - product, >= 0 in any metric space
    double upper_slack = 0.0;  // product + 4 delta - dist, >= 0 given hyperbolicity
    bool holds = true;
};

// Two-sided comparison of the Gromov product <x|y> with the distance from
// the basepoint to a sampled geodesic from x to y:
//   <x|y> <= d(base, G) <= <x|y> + 4 delta.
SandwichReport product_distance_sandwich(const MetricSample& sample, std::size_t base,
                                         std::size_t x, std::size_t y,
                                         const std::vector<std::size_t>& geodesic, double delta,
                                         double tol = 1e-9);

// One comparison pair for a quasi-isometry fit: distances of corresponding
// point pairs in the domain (d0) and image (d1).
struct QiPair {
    double d0 = 0.0;
    double d1 = 0.0;
};

struct QiFit {
    double k = 1.0;
    double mu = 0.0;
    bool finite = true;             // false when a positive d0 maps to ~0 and k blows up
    std::size_t witness_k = 0;      // pair index forcing k
    std::size_t witness_mu = 0;     // pair index realizing mu at the fitted k
};

// Minimal (k, mu), mu minimized first, then k, such that every pair obeys
//   d0 / k - mu <= d1 <= k * d0 + mu.
// mu(k) is non-increasing in k, so the minimal mu is its limit (the worst d1
// over pairs with d0 = 0); k is then the smallest value attaining that mu
// within `tol`.  Minimizing k first is vacuous, since k = 1 with a large
// additive term always fits.
QiFit quasi_isometry_fit(const std::vector<QiPair>& pairs, double tol = 1e-9);

struct ConvergenceReport {
    std::string verdict;          // "diverging" | "bounded" | "inconclusive"
    std::vector<double> profile;  // L(N) = min Gromov product over tail pairs past N
    double threshold = 0.0;
    double rise = 0.0;  // profile.back() - profile.front()
};

// Convergence at infinity of a sequence: the profile tracks the lowest
// pairwise Gromov product among points past each cut N; a sequence converges
// to a boundary point exactly when the profile grows without bound.
// `tail` is the minimum number of trailing points over which products are
// evaluated; threshold 0 selects 5x the median consecutive step.
ConvergenceReport convergence_at_infinity(const MetricSample& sample, std::size_t base,
                                          const std::vector<std::size_t>& seq, std::size_t tail = 3,
                                          double threshold = 0.0);

}  // namespace teichlab
