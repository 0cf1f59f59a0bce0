#include "teichlab/hnet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace teichlab {

std::vector<Slope> slopes_containing(const TeichPoint& tau, double epsilon, i64 denom_bound) {
    if (!(epsilon > 0)) throw std::invalid_argument("thin threshold must be positive");
    std::vector<Slope> out;
    // q = 0: the slope at infinity is short when y >= 1/epsilon
    if (1.0 / tau.y <= epsilon) out.push_back(Slope::infinity());
    // q >= 1: need (p + q x)^2 + (q y)^2 <= epsilon y
    i64 qmax = (i64)std::floor(std::sqrt(epsilon / tau.y));
    qmax = std::min(qmax, denom_bound);
    for (i64 q = 1; q <= qmax; ++q) {
        double rad2 = epsilon * tau.y - (double)q * tau.y * (double)q * tau.y;
        if (rad2 < 0) continue;
        double rad = std::sqrt(rad2);
        i64 plo = (i64)std::ceil(-(double)q * tau.x - rad);
        i64 phi = (i64)std::floor(-(double)q * tau.x + rad);
        for (i64 p = plo; p <= phi; ++p) {
            if (gcd64(p, q) != 1) continue;
            double re = (double)p + (double)q * tau.x;
            if (re * re + (double)q * tau.y * (double)q * tau.y <= epsilon * tau.y)
                out.push_back(Slope{p, q});
        }
    }
    return out;
}

HNet build_hnet(const NetParams& pr, const std::vector<TeichPoint>& extras) {
    if (!(pr.x_min < pr.x_max) || !(0 < pr.y_min) || !(pr.y_min < pr.y_max))
        throw std::invalid_argument("net window is empty");
    if (!(pr.spacing > 0)) throw std::invalid_argument("net spacing must be positive");

    HNet net;
    net.params = pr;

    // grid uniform in (x, log y)
    i64 nx = (i64)std::floor((pr.x_max - pr.x_min) / pr.spacing);
    double ly_min = std::log(pr.y_min), ly_max = std::log(pr.y_max);
    i64 ny = (i64)std::floor((ly_max - ly_min) / pr.spacing);
    for (i64 ix = 0; ix <= nx; ++ix)
        for (i64 iy = 0; iy <= ny; ++iy)
            net.points.push_back(
                TeichPoint{pr.x_min + (double)ix * pr.spacing, std::exp(ly_min + (double)iy * pr.spacing)});

    // interior samples for every thin horoball with small denominator whose
    // ideal point -p/q lies in the window (the grid cannot reach them: the
    // horoball at p/q has euclidean height epsilon/q^2)
    for (i64 q = 1; q <= pr.apex_denom_bound; ++q) {
        for (i64 mp = (i64)std::ceil(-pr.x_max * (double)q); -(double)mp / (double)q >= pr.x_min;
             ++mp) {
            if (gcd64(mp, q) != 1) continue;
            double x0 = -(double)mp / (double)q;
            double top = pr.epsilon / (double)(q * q);  // boundary height over the ideal point
            for (int s = 1; s <= pr.apex_samples; ++s)
                net.points.push_back(TeichPoint{x0, top / (double)(1 << s)});
        }
    }
    // the slope at infinity: vertical samples in {y >= 1/epsilon} if visible
    if (1.0 / pr.epsilon <= pr.y_max)
        for (int s = 1; s <= pr.apex_samples; ++s)
            net.points.push_back(TeichPoint{0.0, (1.0 / pr.epsilon) * (double)(1 << s)});

    // basepoint tau = i, then caller extras
    net.basepoint = net.points.size();
    net.points.push_back(TeichPoint{0.0, 1.0});
    net.extras_begin = net.points.size();
    for (const auto& p : extras) net.points.push_back(TeichPoint::of(p.x, p.y));

    // cone membership
    std::map<std::pair<i64, i64>, std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < net.points.size(); ++i)
        for (const Slope& s : slopes_containing(net.points[i], pr.epsilon, pr.cone_denom_bound))
            cones[{s.q, s.p}].push_back(i);
    for (auto& [qp, members] : cones) {
        net.cone_slopes.push_back(Slope{qp.second, qp.first});
        net.cone_members.push_back(std::move(members));
    }
    return net;
}

MetricSample net_metric(const HNet& net) {
    std::vector<std::string> labels(net.points.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = "p" + std::to_string(i);
    const auto& pts = net.points;
    return MetricSample::from_callable(
        std::move(labels), [&pts](std::size_t i, std::size_t j) { return teich_distance(pts[i], pts[j]); });
}

ElectricSpace net_electric(const HNet& net, const MetricSample& base) {
    ConeSets cones;
    for (std::size_t c = 0; c < net.cone_slopes.size(); ++c) {
        cones.names.push_back(net.cone_slopes[c].str());
        cones.members.push_back(net.cone_members[c]);
    }
    return build_electric(base, std::move(cones));
}

std::size_t nearest_net_point(const HNet& net, const TeichPoint& tau) {
    std::size_t best = 0;
    double bd = teich_distance(net.points[0], tau);
    for (std::size_t i = 1; i < net.points.size(); ++i) {
        double d = teich_distance(net.points[i], tau);
        if (d < bd) {
            bd = d;
            best = i;
        }
    }
    return best;
}

}  // namespace teichlab
