#pragma once

#include <vector>

#include "teichlab/slope.hpp"

namespace teichlab {

// A marked flat torus, recorded as its modulus tau = x + iy in the upper half
// plane.  The Teichmueller metric on this space is half the hyperbolic metric
// of the half plane.
struct TeichPoint {
    double x = 0;
    double y = 1;  // > 0

    static TeichPoint of(double x, double y);  // validates y > 0
    friend bool operator==(const TeichPoint&, const TeichPoint&) = default;
};

// Teichmueller distance: (1/2) * d_hyp(s, t).
double teich_distance(const TeichPoint& s, const TeichPoint& t);

// Extremal length of the foliation (a, b) on the torus of modulus tau:
// |a + b*tau|^2 / Im tau.
double extremal_length(const FoliationVec& f, const TeichPoint& tau);

// Horizontal/vertical foliation pair of the quadratic differential at `base`
// with argument `theta` and norm `norm` (area), norm in (0, 1].
struct HVPair {
    FoliationVec horizontal;
    FoliationVec vertical;
};

HVPair hv_pair(const TeichPoint& base, double theta, double norm);

// The endpoint on the real axis toward which the leaves of (a, b) converge:
// -a/b, or infinity when b = 0.  Returned as +/-inf for the vertical case.
double ideal_endpoint(const FoliationVec& f);

// Point at Teichmueller distance t along the geodesic ray from `start` whose
// vertical foliation is `v` (equivalently: toward the ideal endpoint of v).
TeichPoint ray_point(const TeichPoint& start, const FoliationVec& v, double t);

// n >= 2 points evenly spaced (in the Teichmueller metric) along the geodesic
// from s to t, endpoints reproduced exactly.  s == t yields the single point.
std::vector<TeichPoint> geodesic_segment(const TeichPoint& s, const TeichPoint& t, int n);

// Exact distance from z to the geodesic segment [s, t]: the perpendicular
// foot when it lands between s and t, otherwise the nearer endpoint.
double teich_segment_distance(const TeichPoint& z, const TeichPoint& s, const TeichPoint& t);

// Region of the upper half plane where the given slope is short:
// ext_tau(curve) <= epsilon.  A horoball based at the slope's ideal point.
// At the default threshold the horoballs of distinct slopes are tangent,
// with disjoint interiors.
struct ThinRegion {
    Slope curve;
    double epsilon = 1.0;
};

bool thin_contains(const ThinRegion& r, const TeichPoint& tau);

}  // namespace teichlab
