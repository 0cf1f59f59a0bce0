#include "teichlab/teich.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace teichlab {

namespace {

void require_upper(const TeichPoint& p) {
    if (!(p.y > 0) || !std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::invalid_argument("point must lie in the upper half plane");
}

}  // namespace

TeichPoint TeichPoint::of(double x, double y) {
    TeichPoint p{x, y};
    require_upper(p);
    return p;
}

double teich_distance(const TeichPoint& s, const TeichPoint& t) {
    require_upper(s);
    require_upper(t);
    // d_hyp = 2 asinh(|s - t| / (2 sqrt(y_s y_t))); the Teichmueller distance
    // is half of that.
    double dx = s.x - t.x, dy = s.y - t.y;
    double chord = std::sqrt(dx * dx + dy * dy);
    return std::asinh(chord / (2.0 * std::sqrt(s.y * t.y)));
}

double extremal_length(const FoliationVec& f, const TeichPoint& tau) {
    require_upper(tau);
    double re = f.a() + f.b() * tau.x;
    double im = f.b() * tau.y;
    return (re * re + im * im) / tau.y;
}

HVPair hv_pair(const TeichPoint& base, double theta, double norm) {
    require_upper(base);
    if (!(norm > 0) || norm > 1) throw std::invalid_argument("norm must lie in (0, 1]");
    // The quadratic differential u^2 dz^2 on the flat torus C/(Z + tau Z),
    // |u|^2 Im tau = norm, arg(u^2) = theta.  Its vertical foliation has
    // direction vector (-Re(u tau), Re u), the horizontal one (-Im(u tau), Im u);
    // both then have extremal length equal to norm and intersection number norm.
    std::complex<double> tau(base.x, base.y);
    std::complex<double> u = std::sqrt(norm / base.y) *
                             std::complex<double>(std::cos(theta / 2), std::sin(theta / 2));
    std::complex<double> ut = u * tau;
    return HVPair{FoliationVec(-ut.imag(), u.imag()), FoliationVec(-ut.real(), u.real())};
}

double ideal_endpoint(const FoliationVec& f) {
    if (f.b() == 0) return std::numeric_limits<double>::infinity();
    return -f.a() / f.b();
}

TeichPoint ray_point(const TeichPoint& start, const FoliationVec& v, double t) {
    require_upper(start);
    if (t == 0) return start;
    double e = ideal_endpoint(v);
    // Hyperbolic arclength grows twice as fast as Teichmueller distance.
    double stretch = std::exp(2.0 * t);
    if (std::isinf(e)) return TeichPoint{start.x, start.y * stretch};
    // Send e to infinity by w = -1/(z - e); the ray becomes the vertical line
    // through w0 traversed upward at unit hyperbolic speed.
    std::complex<double> w0 = -1.0 / std::complex<double>(start.x - e, start.y);
    std::complex<double> w(w0.real(), w0.imag() * stretch);
    std::complex<double> z = e - 1.0 / w;
    return TeichPoint{z.real(), z.imag()};
}

std::vector<TeichPoint> geodesic_segment(const TeichPoint& s, const TeichPoint& t, int n) {
    require_upper(s);
    require_upper(t);
    if (s == t) return {s};  // degenerate segment
    if (n < 2) throw std::invalid_argument("segment needs at least two sample points");

    std::vector<TeichPoint> out;
    out.reserve((std::size_t)n);
    if (s.x == t.x) {
        // vertical geodesic: uniform in log y
        double ratio = t.y / s.y;
        for (int k = 0; k < n; ++k) {
            double f = (double)k / (double)(n - 1);
            out.push_back(TeichPoint{s.x, s.y * std::pow(ratio, f)});
        }
    } else {
        // semicircle orthogonal to the real axis through s and t
        double c = ((t.x * t.x + t.y * t.y) - (s.x * s.x + s.y * s.y)) / (2.0 * (t.x - s.x));
        double r = std::hypot(s.x - c, s.y);
        // ideal endpoint on the far side of t, so the parameter increases s -> t
        auto height = [&](const TeichPoint& p, double e) {
            double dx = p.x - e;
            return p.y / (dx * dx + p.y * p.y);
        };
        double e = c + r;
        if (height(t, e) < height(s, e)) e = c - r;
        std::complex<double> ws = -1.0 / std::complex<double>(s.x - e, s.y);
        std::complex<double> wt = -1.0 / std::complex<double>(t.x - e, t.y);
        // The map straightens the geodesic to the vertical line Re w = ws.re,
        // so Re wt only differs by rounding; it is computed from the
        // cancellation-prone end (t sits nearer to e), so reuse ws.re for the
        // whole segment and interpolate the height geometrically, which is
        // exactly even spacing in the metric.
        double ratio = wt.imag() / ws.imag();
        for (int k = 0; k < n; ++k) {
            double f = (double)k / (double)(n - 1);
            std::complex<double> w(ws.real(), ws.imag() * std::pow(ratio, f));
            std::complex<double> z = e - 1.0 / w;
            out.push_back(TeichPoint{z.real(), z.imag()});
        }
    }
    out.front() = s;
    out.back() = t;
    return out;
}

double teich_segment_distance(const TeichPoint& z, const TeichPoint& s, const TeichPoint& t) {
    if (s == t) return teich_distance(z, s);
    double ends = std::min(teich_distance(z, s), teich_distance(z, t));
    if (s.x == t.x) {
        // vertical geodesic x = s.x; the perpendicular from z lands at the
        // height |z - foot|, and sinh(d_hyp) = |dx| / y
        double foot = std::hypot(z.x - s.x, z.y);
        if (foot < std::min(s.y, t.y) || foot > std::max(s.y, t.y)) return ends;
        return 0.5 * std::asinh(std::abs(z.x - s.x) / z.y);
    }
    double c = ((t.x * t.x + t.y * t.y) - (s.x * s.x + s.y * s.y)) / (2.0 * (t.x - s.x));
    double r = std::hypot(s.x - c, s.y);
    double a = c - r, b = c + r;
    // straighten (a, b) to the vertical axis, where the perpendicular from w
    // lands at height |w| and sinh(d_hyp) = |Re w| / Im w
    auto straighten = [&](const TeichPoint& p) {
        std::complex<double> zz(p.x, p.y);
        return (zz - a) / (b - zz);
    };
    std::complex<double> wz = straighten(z);
    double hz = std::abs(wz), hs = std::abs(straighten(s)), ht = std::abs(straighten(t));
    if (hz < std::min(hs, ht) || hz > std::max(hs, ht)) return ends;
    return 0.5 * std::asinh(std::abs(wz.real()) / wz.imag());
}

bool thin_contains(const ThinRegion& r, const TeichPoint& tau) {
    if (!(r.epsilon > 0)) throw std::invalid_argument("thin threshold must be positive");
    return extremal_length(FoliationVec::of_slope(r.curve), tau) <= r.epsilon;
}

}  // namespace teichlab
