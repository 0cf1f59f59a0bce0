#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "teichlab/metric_sample.hpp"

namespace teichlab {

// Named subsets of base points to be coned off.
struct ConeSets {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> members;  // parallel to names
};

// The electric (coned-off) space over a finite base metric: the complete
// graph on the base points weighted by the base metric, plus one apex point
// per cone joined to each of its members by an edge of length 1/2.  All
// distances are graph shortest paths.
//
// Because the base is a complete graph satisfying the triangle inequality,
// a shortest path alternates single base edges with cone traversals.  The
// space therefore reduces exactly to a small graph on the apexes: apexes C,
// C' are joined by weight 1 + min-member-distance(C, C'), base legs attach
// at cone entry cost bd(u, C) = min over members, and
//   d_el(u, v) = min(base(u, v),
//                    min over C, C' of bd(u,C) + 1/2 + D_P(C,C') + 1/2 + bd(C',v)).
// All-pairs apex distances D_P are computed once; node queries then cost
// O(#cones) after a cached O(#cones^2) pass per queried node.
class ElectricSpace {
  public:
    std::size_t base_size() const { return base_.size(); }
    std::size_t cone_count() const { return cones_.names.size(); }
    const MetricSample& base() const { return base_; }
    const ConeSets& cones() const { return cones_; }

    double base_dist(std::size_t u, std::size_t v) const { return base_.dist(u, v); }
    double dist(std::size_t u, std::size_t v) const;  // electric, between base points
    double apex_dist(std::size_t c1, std::size_t c2) const;   // between cone apexes
    double node_to_apex(std::size_t u, std::size_t c) const;  // base point to apex

    // min over members of base distance; +inf when the cone is empty
    double entry_dist(std::size_t u, std::size_t c) const { return bd_[u * cone_count() + c]; }

    // Pairwise electric distances among a subset of base points (row-major
    // m x m), sharing one apex pass per node.
    std::vector<double> pairwise(const std::vector<std::size_t>& nodes) const;

    // Smallest L such that every base point is within electric distance L of
    // some apex: the coboundedness constant of the cone family.
    double cobounded_radius() const;

    friend ElectricSpace build_electric(MetricSample base, ConeSets cones);

  private:
    ElectricSpace(MetricSample base, ConeSets cones);
    std::vector<double> apex_row(std::size_t u) const;  // g_u(C) = min_C' bd(u,C') + D_P(C',C)

    MetricSample base_;
    ConeSets cones_;
    std::vector<double> bd_;  // base_size x cone_count entry distances
    std::vector<double> dp_;  // cone_count^2 apex-to-apex distances
};

// Validates the cone family (nonempty member lists, ids in range) and
// assembles the space.  An empty family is allowed: the electric metric is
// then just the base metric.
ElectricSpace build_electric(MetricSample base, ConeSets cones);

// A sampled path: base node ids with strictly increasing parameters.
struct PathTrace {
    std::vector<std::size_t> nodes;
    std::vector<double> params;

    static PathTrace of(std::vector<std::size_t> nodes, std::vector<double> params);
};

// Scale-c arclength of a sampled path: c times the minimal number of
// parameter blocks whose sampled electric diameter is at most c.  Greedy
// maximal blocks realize the minimum (block diameter only grows under
// extension).  Operates on a precomputed pairwise matrix of the path nodes.
double lc_length(const ElectricSpace& sp, const PathTrace& path, double c);

// Minimal block count behind lc_length, for sub-ranges [i, j] of the path.
int lc_blocks(const std::vector<double>& pairwise, std::size_t n, std::size_t i, std::size_t j,
              double c);

// Lexicographically minimal (k, mu), k >= 1, mu >= 0, with
//   l_c(p|[i,j]) / k - mu <= d_el(p_i, p_j) <= k * l_c(p|[i,j]) + mu
// over all sample index pairs.  The right inequality is automatic at k = 1
// (electric distance never exceeds scale-c arclength), so the minimum pins
// k = 1 and mu carries the worst left-hand defect.
struct QuasigeodesicFit {
    double k = 1.0;
    double mu = 0.0;
    std::size_t witness_i = 0, witness_j = 0;  // pair realizing mu
};

QuasigeodesicFit quasigeodesic_fit(const ElectricSpace& sp, const PathTrace& path, double c);

}  // namespace teichlab
