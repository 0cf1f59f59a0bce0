#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "teichlab/slope.hpp"

namespace teichlab {

// The curve graph of the once-punctured torus (threshold 1) or the
// four-punctured sphere (threshold 2): vertices are slopes, and two slopes
// are joined exactly when their intersection number equals the threshold.
struct FareyParams {
    i64 threshold = 1;  // 1 for the torus, 2 for the four-punctured sphere
};

// Search options.  The graph on all slopes is locally infinite, so distance
// queries run inside the finite universe of slopes of height max(|p|, q) <=
// denom_bound.  Every verified query is re-run with the bound doubled; a
// mismatch means the bound clipped a geodesic and the query throws.
struct FareyOptions {
    i64 denom_bound = 0;               // 0: automatic, 4 * max(input height, 1)^2
    bool verify_insensitivity = true;  // recompute at 2x bound and compare
    std::size_t vertex_cap = 4'000'000;  // explosion guard for ball growth
};

bool adjacent(const Slope& a, const Slope& b, const FareyParams& params = {});

i64 default_denom_bound(const Slope& a, const Slope& b);

int farey_distance(const Slope& a, const Slope& b, const FareyParams& params = {},
                   const FareyOptions& opts = {});

// Distances from one source to many targets, sharing a single level growth
// around the source (the per-pair search re-grows it for every call, which
// dominates bulk all-pairs audits).  Results match farey_distance exactly;
// with an automatic bound, the universe covers the highest slope involved.
// For balanced cost, make the source the highest slope of its batch: fans
// shrink with height, so growing around the source is then cheapest.
std::vector<int> farey_distances_from(const Slope& source, const std::vector<Slope>& targets,
                                      const FareyParams& params = {},
                                      const FareyOptions& opts = {});

// One shortest path from a to b.  Ties are broken deterministically: each
// step takes the (q, p)-lexicographically least neighbor that still lies on
// some geodesic to b.
std::vector<Slope> geodesic_path(const Slope& a, const Slope& b, const FareyParams& params = {},
                                 const FareyOptions& opts = {});

// Ball of the bounded graph around `center`, with graph distances and the
// edge list of the induced subgraph.  Vertices are sorted by (q, p) and the
// edge list refers to vertex indices with i < j.
struct FareyBall {
    Slope center;
    int radius = 0;
    i64 denom_bound = 0;
    std::vector<Slope> vertices;
    std::vector<int> dist;  // parallel to vertices
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

FareyBall ball(const Slope& center, int radius, const FareyParams& params = {},
               i64 denom_bound = 0, std::size_t vertex_cap = 4'000'000);

// Neighbors of v in the bounded graph, sorted by (q, p).
std::vector<Slope> neighbor_fan(const Slope& v, i64 denom_bound, const FareyParams& params = {});

}  // namespace teichlab
