#include "teichlab/electric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace teichlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxCones = 1500;  // Floyd-Warshall ceiling, ~3.4e9 ops
}

ElectricSpace build_electric(MetricSample base, ConeSets cones) {
    if (cones.names.size() != cones.members.size())
        throw std::invalid_argument("cone names and member lists must be parallel");
    if (cones.names.size() > kMaxCones)
        throw std::invalid_argument("too many cones for the all-pairs apex pass");
    for (const auto& m : cones.members) {
        if (m.empty()) throw std::invalid_argument("cone sets must be nonempty");
        for (std::size_t id : m)
            if (id >= base.size()) throw std::invalid_argument("cone member id out of range");
    }
    return ElectricSpace(std::move(base), std::move(cones));
}

ElectricSpace::ElectricSpace(MetricSample base, ConeSets cones)
    : base_(std::move(base)), cones_(std::move(cones)) {
    const std::size_t n = base_.size(), c = cones_.names.size();

    bd_.assign(n * c, kInf);
    for (std::size_t ci = 0; ci < c; ++ci)
        for (std::size_t u = 0; u < n; ++u) {
            double best = kInf;
            for (std::size_t m : cones_.members[ci]) best = std::min(best, base_.dist(u, m));
            bd_[u * c + ci] = best;
        }

    // apex graph: w(C, C') = 1 + min member-to-member base distance
    dp_.assign(c * c, kInf);
    for (std::size_t i = 0; i < c; ++i) {
        dp_[i * c + i] = 0.0;
        for (std::size_t j = i + 1; j < c; ++j) {
            double sd = kInf;
            for (std::size_t m : cones_.members[i]) sd = std::min(sd, bd_[m * c + j]);
            dp_[i * c + j] = dp_[j * c + i] = 1.0 + sd;
        }
    }
    // all-pairs shortest paths among apexes
    for (std::size_t k = 0; k < c; ++k)
        for (std::size_t i = 0; i < c; ++i) {
            double dik = dp_[i * c + k];
            if (dik == kInf) continue;
            double* di = &dp_[i * c];
            const double* dk = &dp_[k * c];
            for (std::size_t j = 0; j < c; ++j) {
                double cand = dik + dk[j];
                if (cand < di[j]) di[j] = cand;
            }
        }
}

std::vector<double> ElectricSpace::apex_row(std::size_t u) const {
    const std::size_t c = cone_count();
    std::vector<double> g(c, kInf);
    const double* bd = &bd_[u * c];
    for (std::size_t ci = 0; ci < c; ++ci) {
        if (bd[ci] == kInf) continue;
        const double* dp = &dp_[ci * c];
        double base = bd[ci];
        for (std::size_t cj = 0; cj < c; ++cj) {
            double cand = base + dp[cj];
            if (cand < g[cj]) g[cj] = cand;
        }
    }
    return g;
}

double ElectricSpace::dist(std::size_t u, std::size_t v) const {
    const std::size_t c = cone_count();
    double best = base_.dist(u, v);
    std::vector<double> g = apex_row(u);
    const double* bdv = &bd_[v * c];
    for (std::size_t cj = 0; cj < c; ++cj) {
        double cand = g[cj] + 1.0 + bdv[cj];
        if (cand < best) best = cand;
    }
    return best;
}

double ElectricSpace::apex_dist(std::size_t c1, std::size_t c2) const {
    return dp_[c1 * cone_count() + c2];
}

double ElectricSpace::node_to_apex(std::size_t u, std::size_t c) const {
    std::vector<double> g = apex_row(u);
    return g[c] + 0.5;
}

std::vector<double> ElectricSpace::pairwise(const std::vector<std::size_t>& nodes) const {
    const std::size_t m = nodes.size(), c = cone_count();
    std::vector<std::vector<double>> rows(m);
    for (std::size_t i = 0; i < m; ++i) rows[i] = apex_row(nodes[i]);
    std::vector<double> out(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double best = base_.dist(nodes[i], nodes[j]);
            const double* g = rows[i].data();
            const double* bdv = &bd_[nodes[j] * c];
            for (std::size_t cj = 0; cj < c; ++cj) {
                double cand = g[cj] + 1.0 + bdv[cj];
                if (cand < best) best = cand;
            }
            out[i * m + j] = out[j * m + i] = best;
        }
    return out;
}

double ElectricSpace::cobounded_radius() const {
    const std::size_t n = base_size(), c = cone_count();
    double worst = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        double best = kInf;
        for (std::size_t ci = 0; ci < c; ++ci) best = std::min(best, bd_[u * c + ci]);
        worst = std::max(worst, best + 0.5);
    }
    return worst;
}

PathTrace PathTrace::of(std::vector<std::size_t> nodes, std::vector<double> params) {
    if (nodes.empty()) throw std::invalid_argument("path must be nonempty");
    if (nodes.size() != params.size())
        throw std::invalid_argument("path nodes and parameters must be parallel");
    for (std::size_t i = 0; i + 1 < params.size(); ++i)
        if (!(params[i] < params[i + 1]))
            throw std::invalid_argument("path parameters must be strictly increasing");
    return PathTrace{std::move(nodes), std::move(params)};
}

int lc_blocks(const std::vector<double>& pw, std::size_t n, std::size_t i, std::size_t j,
              double c) {
    // greedy maximal blocks left to right; diameter is monotone under
    // extension, so this minimizes the block count
    int blocks = 1;
    std::size_t start = i;
    double diam = 0.0;
    for (std::size_t t = i + 1; t <= j; ++t) {
        double d = diam;
        for (std::size_t s = start; s < t; ++s) d = std::max(d, pw[s * n + t]);
        if (d > c) {
            ++blocks;
            start = t;
            diam = 0.0;
        } else {
            diam = d;
        }
    }
    return blocks;
}

double lc_length(const ElectricSpace& sp, const PathTrace& path, double c) {
    if (!(c > 0)) throw std::invalid_argument("scale must be positive");
    if (path.nodes.empty()) throw std::invalid_argument("path must be nonempty");
    std::size_t n = path.nodes.size();
    if (n == 1) return 0.0;
    std::vector<double> pw = sp.pairwise(path.nodes);
    return c * lc_blocks(pw, n, 0, n - 1, c);
}

QuasigeodesicFit quasigeodesic_fit(const ElectricSpace& sp, const PathTrace& path, double c) {
    if (!(c > 0)) throw std::invalid_argument("scale must be positive");
    std::size_t n = path.nodes.size();
    if (n < 2) throw std::invalid_argument("fit needs at least two path samples");
    std::vector<double> pw = sp.pairwise(path.nodes);

    // d_el <= l_c always (each block contributes at most c of electric
    // displacement), so (1, 0) satisfies the right inequality and k = 1 is
    // the lexicographic minimum; mu is the worst left-hand defect.
    QuasigeodesicFit fit;
    for (std::size_t i = 0; i < n; ++i) {
        int blocks = 1;
        std::size_t start = i;
        double diam = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = diam;
            for (std::size_t s = start; s < j; ++s) d = std::max(d, pw[s * n + j]);
            if (d > c) {
                ++blocks;
                start = j;
                diam = 0.0;
            } else {
                diam = d;
            }
            double defect = c * blocks - pw[i * n + j];
            if (defect > fit.mu) {
                fit.mu = defect;
                fit.witness_i = i;
                fit.witness_j = j;
            }
        }
    }
    return fit;
}

}  // namespace teichlab
