#pragma once

#include <cstddef>
#include <vector>

#include "teichlab/electric.hpp"
#include "teichlab/metric_sample.hpp"
#include "teichlab/slope.hpp"
#include "teichlab/teich.hpp"

namespace teichlab {

// Sampling net over a window of the upper half plane: a grid uniform in
// (x, log y), plus a few vertical samples inside each thin horoball of slope
// denominator up to `apex_denom_bound` (the grid itself rarely reaches into
// those), plus caller-supplied extra points (ray or segment samples).
struct NetParams {
    double x_min = -2.0, x_max = 2.0;
    double y_min = 0.02, y_max = 20.0;
    double spacing = 0.15;  // step in x and in log y
    // Thin threshold.  At 1.0 the horoballs are mutually tangent with
    // disjoint interiors, and geodesic rays toward badly-approximable ideal
    // points (the interesting targets) still clip their convergents'
    // horoballs; smaller values leave such rays outside every thin region.
    double epsilon = 1.0;
    i64 cone_denom_bound = 4000;  // slopes eligible for coning (by denominator)
    i64 apex_denom_bound = 13;    // slopes seeded with interior samples
    int apex_samples = 3;         // vertical samples per seeded horoball

    friend bool operator==(const NetParams&, const NetParams&) = default;
};

struct HNet {
    NetParams params;
    std::vector<TeichPoint> points;  // grid, apex samples, then extras
    std::size_t basepoint = 0;       // index of tau = i
    std::size_t extras_begin = 0;    // index of the first caller-supplied point
    std::vector<Slope> cone_slopes;  // sorted by (q, p)
    std::vector<std::vector<std::size_t>> cone_members;  // parallel to cone_slopes
};

// Slopes whose thin region contains tau, i.e. ext_tau(p/q) <= epsilon, with
// denominator at most `denom_bound`.  For epsilon < 1 thin regions of
// distinct slopes are disjoint (at most one slope); at epsilon = 1 their
// interiors are still disjoint but boundaries touch, so a tangency point
// reports both slopes, sorted by (q, p).
std::vector<Slope> slopes_containing(const TeichPoint& tau, double epsilon, i64 denom_bound);

HNet build_hnet(const NetParams& params, const std::vector<TeichPoint>& extras = {});

// Dense Teichmueller distance matrix over the net points.
MetricSample net_metric(const HNet& net);

// Electric space of the net: one cone per thin region that captured at least
// one net point.
ElectricSpace net_electric(const HNet& net, const MetricSample& base);

std::size_t nearest_net_point(const HNet& net, const TeichPoint& tau);

}  // namespace teichlab
