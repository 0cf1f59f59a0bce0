#include "teichlab/gromov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace teichlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double gromov_product(const MetricSample& s, std::size_t x, std::size_t y, std::size_t base) {
    return 0.5 * (s.dist(base, x) + s.dist(base, y) - s.dist(x, y));
}

DeltaReport delta_four_point(const MetricSample& sample, const DeltaOptions& opts) {
    const std::size_t n = sample.size();
    DeltaReport rep;
    rep.points_total = n;

    std::vector<std::size_t> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    if (n > opts.exact_cutoff) {
        // deterministic subsample; its delta is a lower bound for the full scan
        Rng rng(opts.seed);
        for (std::size_t i = n - 1; i > 0; --i)
            std::swap(pts[i], pts[rng.below(i + 1)]);
        pts.resize(opts.sample_points);
        std::sort(pts.begin(), pts.end());
        rep.exhaustive = false;
    }
    const std::size_t m = pts.size();
    rep.points_used = m;
    if (m < 4) return rep;

    std::vector<double> prod(m * m);
    for (std::size_t bi = 0; bi < m; ++bi) {
        const std::size_t b = pts[bi];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                double p = gromov_product(sample, pts[i], pts[j], b);
                prod[i * m + j] = p;
                prod[j * m + i] = p;
            }
        // the defect is symmetric in (x, z), so scan unordered pairs
        for (std::size_t x = 0; x < m; ++x) {
            const double* px = &prod[x * m];
            for (std::size_t z = x + 1; z < m; ++z) {
                const double* pz = &prod[z * m];
                double pxz = px[z];
                for (std::size_t y = 0; y < m; ++y) {
                    double defect = std::min(px[y], pz[y]) - pxz;
                    if (defect > rep.delta) {
                        rep.delta = defect;
                        rep.witness = {b, pts[x], pts[y], pts[z]};
                    }
                }
            }
        }
    }
    return rep;
}

double replay_delta(const MetricSample& s, const std::array<std::size_t, 4>& w) {
    auto [b, x, y, z] = w;
    return std::min(gromov_product(s, x, y, b), gromov_product(s, z, y, b)) -
           gromov_product(s, x, z, b);
}

NarrowReport narrow_polygon_check(const MetricSample& sample,
                                  const std::vector<std::vector<std::size_t>>& sides,
                                  double bound) {
    if (sides.size() < 2) throw std::invalid_argument("polygon needs at least two sides");
    NarrowReport rep;
    for (std::size_t si = 0; si < sides.size(); ++si) {
        for (std::size_t pi = 0; pi < sides[si].size(); ++pi) {
            double best = kInf;
            for (std::size_t sj = 0; sj < sides.size(); ++sj) {
                if (sj == si) continue;
                for (std::size_t q : sides[sj])
                    best = std::min(best, sample.dist(sides[si][pi], q));
            }
            if (best > rep.worst_offset) {
                rep.worst_offset = best;
                rep.worst_side = si;
                rep.worst_index = pi;
            }
        }
    }
    rep.within = rep.worst_offset <= bound;
    return rep;
}

SandwichReport product_distance_sandwich(const MetricSample& sample, std::size_t base,
                                         std::size_t x, std::size_t y,
                                         const std::vector<std::size_t>& geodesic, double delta,
                                         double tol) {
    if (geodesic.empty()) throw std::invalid_argument("geodesic sample must be nonempty");
    SandwichReport rep;
    rep.product = gromov_product(sample, x, y, base);
    rep.dist_to_geodesic = kInf;
    for (std::size_t g : geodesic)
        rep.dist_to_geodesic = std::min(rep.dist_to_geodesic, sample.dist(base, g));
    rep.lower_slack = rep.dist_to_geodesic - rep.product;
    rep.upper_slack = rep.product + 4.0 * delta - rep.dist_to_geodesic;
    rep.holds = rep.lower_slack >= -tol && rep.upper_slack >= -tol;
    return rep;
}

QiFit quasi_isometry_fit(const std::vector<QiPair>& pairs, double tol) {
    if (pairs.empty()) throw std::invalid_argument("fit needs at least one pair");
    QiFit fit;

    // limit of mu(k): pairs with d0 = 0 keep |d1| <= mu alive at every k
    double mu_limit = 0.0;
    for (const auto& p : pairs)
        if (p.d0 == 0.0) mu_limit = std::max(mu_limit, p.d1);
    double mu_target = mu_limit + tol;

    // smallest k at which every constraint drops to mu_target
    double k = 1.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if (p.d0 == 0.0) continue;
        double need = (p.d1 - mu_target) / p.d0;  // from d1 <= k d0 + mu
        if (p.d1 + mu_target > 0)
            need = std::max(need, p.d0 / (p.d1 + mu_target));  // from d0/k - mu <= d1
        else
            need = kInf;
        if (need > k) {
            k = need;
            fit.witness_k = i;
        }
    }
    if (!(k < 1e8)) {
        fit.finite = false;
        k = 1e8;
    }
    fit.k = k;

    // exact mu at the fitted k, and its witness
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        double need = std::max(p.d1 - k * p.d0, p.d0 / k - p.d1);
        if (need > fit.mu) {
            fit.mu = need;
            fit.witness_mu = i;
        }
    }
    return fit;
}

ConvergenceReport convergence_at_infinity(const MetricSample& sample, std::size_t base,
                                          const std::vector<std::size_t>& seq, std::size_t tail,
                                          double threshold) {
    if (seq.size() < 3) throw std::invalid_argument("sequence needs at least three points");
    if (tail < 2) tail = 2;
    ConvergenceReport rep;

    if (threshold <= 0) {
        std::vector<double> steps;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            steps.push_back(sample.dist(seq[i], seq[i + 1]));
        std::sort(steps.begin(), steps.end());
        double median = steps[steps.size() / 2];
        threshold = 5.0 * std::max(median, 1e-12);
    }
    rep.threshold = threshold;

    std::size_t cuts = seq.size() >= tail ? seq.size() - tail + 1 : 1;
    for (std::size_t N = 0; N < cuts; ++N) {
        double low = kInf;
        for (std::size_t i = N; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                low = std::min(low, gromov_product(sample, seq[i], seq[j], base));
        rep.profile.push_back(low);
    }
    rep.rise = rep.profile.back() - rep.profile.front();

    bool nondecreasing = true;
    for (std::size_t i = 0; i + 1 < rep.profile.size(); ++i)
        if (rep.profile[i + 1] < rep.profile[i] - 1e-9) nondecreasing = false;

    if (nondecreasing && rep.rise >= threshold)
        rep.verdict = "diverging";
    else if (rep.rise < threshold * 0.2)
        rep.verdict = "bounded";
    else
        rep.verdict = "inconclusive";
    return rep;
}

}  // namespace teichlab
