#pragma once

#include <cstdint>
#include <vector>

#include "teichlab/continued_fraction.hpp"
#include "teichlab/report.hpp"
#include "teichlab/slope.hpp"

namespace teichlab {

// Shared knobs for the experiment suite.  Every experiment derives its
// sampling net and bounds from these plus its own arguments; given equal
// config and arguments, reports are byte-identical across runs.
struct LabConfig {
    double epsilon = 1.0;    // thin threshold (tangent horoballs; see NetParams)
    double spacing = 0.15;   // net spacing in (x, log y)
    double window = 1.75;    // half-width of the slope-value window
    double y_min = 0.02;     // grid floor (horoball interiors get their own samples)
    double y_max = 20.0;
    i64 cone_denom_bound = 0;   // 0: auto per experiment
    i64 apex_denom_bound = 13;  // horoballs seeded with interior samples
    std::uint64_t seed = 1729;
};

// Electric distance from the basepoint along the geodesic ray toward the
// target's ideal point, sampled every `step` up to time T.  Irrational
// targets should diverge (the ray keeps crossing fresh horoballs), rational
// ones should stall inside the target's horoball.
ExperimentReport ray_profile(const ContinuedFraction& target, double T, double step,
                             const LabConfig& cfg);

// Gromov products (in the electric metric, based at tau = i) of matched
// samples on the rays toward two distinct irrational targets.  Distinct
// targets should produce a plateau: the rays separate.  Equal targets are
// run as a control and should diverge jointly.
ExperimentReport separation_profile(const ContinuedFraction& f, const ContinuedFraction& g, int n,
                                    const LabConfig& cfg);

// Part (a): fits (k, mu) between curve-graph distance and electric apex
// distance over all slopes with denominator <= denom_bound in the window.
// Part (b): fits quasigeodesic constants at scale 1 for `geodesics` random
// geodesic segments snapped to the net.
ExperimentReport qi_audit(i64 denom_bound, const LabConfig& cfg, int geodesics = 10);

// Hausdorff-in-a-window profile of the geodesic segments joining matched
// samples on the rays toward two distinct irrational targets, against the
// line joining the targets' ideal points.  Segments should accumulate onto
// that line; equal targets degenerate and the segments escape the window.
ExperimentReport segment_accumulation(const ContinuedFraction& f, const ContinuedFraction& g,
                                      int n, const LabConfig& cfg);

// Audits the boundary correspondence on a slope sequence: divergence in the
// curve graph (via the convergence-at-infinity profile) against numeric
// convergence of the slope values to a single limit.
ExperimentReport boundary_map_audit(const std::vector<Slope>& seq, const LabConfig& cfg);

}  // namespace teichlab
