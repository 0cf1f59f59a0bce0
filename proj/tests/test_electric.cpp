#include <doctest.h>

#include <climits>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "teichlab/electric.hpp"
#include "teichlab/metric_sample.hpp"

using namespace teichlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

MetricSample euclidean(const std::vector<std::pair<double, double>>& pts) {
    return MetricSample::from_callable(labels(pts.size()), [&](std::size_t i, std::size_t j) {
        return std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
    });
}

// Independent model of the coned-off space: materialize the full weighted
// graph on base points plus one node per apex (half-length spokes to the
// members) and run Floyd-Warshall.  No apex-graph reduction involved.
struct BruteElectric {
    std::size_t n, c;
    std::vector<double> d;  // (n + c)^2

    BruteElectric(const MetricSample& base, const ConeSets& cones)
        : n(base.size()), c(cones.names.size()), d((n + c) * (n + c), kInf) {
        const std::size_t N = n + c;
        for (std::size_t i = 0; i < N; ++i) d[i * N + i] = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i * N + j] = base.dist(i, j);
        for (std::size_t k = 0; k < c; ++k)
            for (std::size_t m : cones.members[k])
                d[m * N + (n + k)] = d[(n + k) * N + m] = 0.5;
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    d[i * N + j] = std::min(d[i * N + j], d[i * N + k] + d[k * N + j]);
    }

    double at(std::size_t i, std::size_t j) const { return d[i * (n + c) + j]; }
};

MetricSample line_metric(const std::vector<double>& xs) {
    return MetricSample::from_callable(
        labels(xs.size()), [&](std::size_t i, std::size_t j) { return std::abs(xs[i] - xs[j]); });
}

// Minimal number of diameter-<= c blocks by dynamic programming, the slow
// reference for the greedy sweep.
int brute_blocks(const std::vector<double>& pw, std::size_t n, double c) {
    std::vector<int> best(n + 1, INT_MAX);
    best[0] = 0;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = j; i >= 1; --i) {
            double diam = 0.0;
            for (std::size_t s = i - 1; s < j; ++s)
                for (std::size_t t = s + 1; t < j; ++t) diam = std::max(diam, pw[s * n + t]);
            if (diam > c) break;
            if (best[i - 1] != INT_MAX) best[j] = std::min(best[j], best[i - 1] + 1);
        }
    return best[n];
}

}  // namespace

TEST_CASE("no cones leaves the base metric untouched") {
    MetricSample base = euclidean({{0, 0}, {3, 0}, {0, 4}});
    ElectricSpace sp = build_electric(base, ConeSets{});
    CHECK(sp.cone_count() == 0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(sp.dist(i, j) == base.dist(i, j));
    CHECK(std::isinf(sp.cobounded_radius()));
}

TEST_CASE("one cone: members sit a unit apart through the apex") {
    MetricSample base = line_metric({0.0, 5.0, 11.0});
    ElectricSpace sp = build_electric(base, ConeSets{{"all"}, {{0, 1, 2}}});
    CHECK(sp.dist(0, 1) == 1.0);
    CHECK(sp.dist(0, 2) == 1.0);
    CHECK(sp.node_to_apex(0, 0) == 0.5);
    CHECK(sp.cobounded_radius() == 0.5);

    // short base hops stay direct; the apex detour costs a full unit
    MetricSample close = line_metric({0.0, 0.25, 9.0});
    ElectricSpace sp2 = build_electric(close, ConeSets{{"all"}, {{0, 1, 2}}});
    CHECK(sp2.dist(0, 1) == 0.25);
    CHECK(sp2.dist(0, 2) == 1.0);
}

TEST_CASE("chained cones compose at one unit per traversal") {
    // A = {0, 1}, B = {1, 2} share point 1: going 0 -> apex A -> 1 -> apex B -> 2
    MetricSample base = line_metric({0.0, 50.0, 100.0});
    ElectricSpace sp = build_electric(base, ConeSets{{"A", "B"}, {{0, 1}, {1, 2}}});
    CHECK(sp.dist(0, 2) == 2.0);
    CHECK(sp.apex_dist(0, 1) == 1.0);
    CHECK(sp.apex_dist(0, 0) == 0.0);
    CHECK(sp.node_to_apex(0, 1) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("reduction matches brute-force shortest paths") {
    Rng rng(97);
    for (int inst = 0; inst < 12; ++inst) {
        std::size_t n = 4 + rng.below(5);
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back({rng.uniform(0.0, 6.0), rng.uniform(0.0, 6.0)});
        MetricSample base = euclidean(pts);

        ConeSets cones;
        std::size_t nc = 1 + rng.below(3);
        for (std::size_t k = 0; k < nc; ++k) {
            std::vector<std::size_t> members;
            std::size_t sz = 1 + rng.below(3);
            for (std::size_t t = 0; t < sz; ++t) {
                std::size_t id = rng.below(n);
                bool dup = false;
                for (std::size_t m : members) dup |= (m == id);
                if (!dup) members.push_back(id);
            }
            cones.names.push_back("c" + std::to_string(k));
            cones.members.push_back(members);
        }

        ElectricSpace sp = build_electric(base, cones);
        BruteElectric ref(base, cones);

        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(i);
        std::vector<double> pw = sp.pairwise(all);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(sp.dist(i, j) == doctest::Approx(ref.at(i, j)).epsilon(1e-12));
                CHECK(pw[i * n + j] == doctest::Approx(ref.at(i, j)).epsilon(1e-12));
                CHECK(sp.dist(i, j) <= base.dist(i, j) + 1e-12);
            }
        for (std::size_t k = 0; k < nc; ++k) {
            for (std::size_t l = 0; l < nc; ++l)
                CHECK(sp.apex_dist(k, l) == doctest::Approx(ref.at(n + k, n + l)).epsilon(1e-12));
            for (std::size_t i = 0; i < n; ++i)
                CHECK(sp.node_to_apex(i, k) == doctest::Approx(ref.at(i, n + k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("adding a cone never lengthens a trip") {
    Rng rng(103);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 7; ++i) pts.push_back({rng.uniform(0.0, 8.0), rng.uniform(0.0, 8.0)});
    MetricSample base = euclidean(pts);

    ConeSets one{{"a"}, {{0, 3}}};
    ConeSets two{{"a", "b"}, {{0, 3}, {2, 5, 6}}};
    ElectricSpace sp1 = build_electric(base, one);
    ElectricSpace sp2 = build_electric(base, two);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) CHECK(sp2.dist(i, j) <= sp1.dist(i, j) + 1e-12);
    CHECK(sp2.cobounded_radius() <= sp1.cobounded_radius() + 1e-12);
}

TEST_CASE("construction validates the cone family") {
    MetricSample base = line_metric({0.0, 1.0});
    CHECK_THROWS_AS(build_electric(base, ConeSets{{"a"}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(build_electric(base, ConeSets{{"a"}, {{}}}), std::invalid_argument);
    CHECK_THROWS_AS(build_electric(base, ConeSets{{"a"}, {{7}}}), std::invalid_argument);
}

TEST_CASE("path traces validate their parameters") {
    CHECK_THROWS_AS(PathTrace::of({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PathTrace::of({0, 1}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PathTrace::of({0, 1}, {1.0, 1.0}), std::invalid_argument);
    PathTrace p = PathTrace::of({0, 1}, {0.0, 2.0});
    CHECK(p.nodes.size() == 2);
}

TEST_CASE("scale-c arclength counts diameter blocks") {
    MetricSample base = line_metric({0.0, 0.3, 0.6, 0.9});
    ElectricSpace sp = build_electric(base, ConeSets{});

    PathTrace path = PathTrace::of({0, 1, 2, 3}, {0.0, 1.0, 2.0, 3.0});
    CHECK(lc_length(sp, path, 1.0) == 1.0);   // whole path fits one block
    CHECK(lc_length(sp, path, 0.35) == 0.7);  // {0,1}, {2,3}
    CHECK(lc_length(sp, PathTrace::of({2}, {0.0}), 1.0) == 0.0);
    CHECK_THROWS_AS(lc_length(sp, path, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lc_length(sp, path, -1.0), std::invalid_argument);

    // a chain of points one unit apart needs one block per two points
    std::vector<double> xs;
    std::vector<std::size_t> nodes;
    std::vector<double> params;
    for (int i = 0; i < 9; ++i) {
        xs.push_back(i);
        nodes.push_back(i);
        params.push_back(i);
    }
    ElectricSpace chain = build_electric(line_metric(xs), ConeSets{});
    CHECK(lc_length(chain, PathTrace::of(nodes, params), 1.0) == 5.0);  // ceil(9 / 2) blocks
}

TEST_CASE("arclength never drops when samples are added") {
    Rng rng(7);
    for (int inst = 0; inst < 20; ++inst) {
        std::vector<double> xs;
        for (int i = 0; i < 11; ++i) xs.push_back(rng.uniform(0.0, 10.0));
        ElectricSpace sp = build_electric(line_metric(xs), ConeSets{});

        std::vector<std::size_t> full_nodes;
        std::vector<double> full_params;
        std::vector<std::size_t> sub_nodes;
        std::vector<double> sub_params;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            full_nodes.push_back(i);
            full_params.push_back((double)i);
            if (i % 2 == 0) {
                sub_nodes.push_back(i);
                sub_params.push_back((double)i);
            }
        }
        for (double c : {0.5, 1.0, 2.5}) {
            double coarse = lc_length(sp, PathTrace::of(sub_nodes, sub_params), c);
            double fine = lc_length(sp, PathTrace::of(full_nodes, full_params), c);
            CHECK(coarse <= fine + 1e-12);
        }
    }
}

TEST_CASE("greedy block sweep matches dynamic programming") {
    Rng rng(41);
    for (int inst = 0; inst < 30; ++inst) {
        std::size_t n = 2 + rng.below(11);
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back({rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)});
        ElectricSpace sp = build_electric(euclidean(pts), ConeSets{});
        std::vector<std::size_t> nodes;
        for (std::size_t i = 0; i < n; ++i) nodes.push_back(i);
        std::vector<double> pw = sp.pairwise(nodes);
        for (double c : {0.3, 1.0, 3.0, 10.0})
            CHECK(lc_blocks(pw, n, 0, n - 1, c) == brute_blocks(pw, n, c));
    }
}

TEST_CASE("quasigeodesic fit pins k = 1 and measures backtracking") {
    // evenly spaced straight line: arclength never undershoots the distance
    std::vector<double> xs;
    std::vector<std::size_t> nodes;
    std::vector<double> params;
    for (int i = 0; i < 10; ++i) {
        xs.push_back(i);
        nodes.push_back(i);
        params.push_back(i);
    }
    ElectricSpace line = build_electric(line_metric(xs), ConeSets{});
    QuasigeodesicFit straight = quasigeodesic_fit(line, PathTrace::of(nodes, params), 1.0);
    CHECK(straight.k == 1.0);
    CHECK(straight.mu == 0.0);

    // a sharp backtrack inflates arclength without advancing: 0 -> 3 -> 0.01
    ElectricSpace back = build_electric(line_metric({0.0, 3.0, 0.01}), ConeSets{});
    QuasigeodesicFit bent = quasigeodesic_fit(back, PathTrace::of({0, 1, 2}, {0.0, 1.0, 2.0}), 1.0);
    CHECK(bent.k == 1.0);
    CHECK(bent.mu == doctest::Approx(2.99).epsilon(1e-12));
    CHECK(bent.witness_i == 0);
    CHECK(bent.witness_j == 2);

    CHECK_THROWS_AS(quasigeodesic_fit(back, PathTrace::of({0}, {0.0}), 1.0),
                    std::invalid_argument);
}
