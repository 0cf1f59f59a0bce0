#include <doctest.h>

#include <cmath>
#include <vector>

#include "teichlab/metric_sample.hpp"
#include "teichlab/slope.hpp"
#include "teichlab/teich.hpp"

using namespace teichlab;

namespace {

// Independent distance oracle: d_hyp(s,t) = arccosh(1 + |s-t|^2 / (2 y_s y_t)),
// halved.  The production code goes through asinh of the chordal ratio; the
// two agree only if both are right.
double half_arccosh_distance(const TeichPoint& s, const TeichPoint& t) {
    double dx = s.x - t.x, dy = s.y - t.y;
    return 0.5 * std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * s.y * t.y));
}

TeichPoint random_point(Rng& rng) {
    return TeichPoint::of(rng.uniform(-3.0, 3.0),
                          std::exp(rng.uniform(std::log(0.05), std::log(20.0))));
}

FoliationVec random_rational_vec(Rng& rng) {
    i64 p = (i64)rng.below(41) - 20;
    i64 q = 1 + (i64)rng.below(20);
    Slope s = Slope::of(p ? p : 1, q);
    Rational w = Rational::of(1 + (i64)rng.below(9), 1 + (i64)rng.below(9));
    return FoliationVec::scaled(s, w);
}

}  // namespace

TEST_CASE("distance on the vertical axis and off it") {
    TeichPoint i0{0, 1};
    CHECK(teich_distance(i0, i0) == 0.0);
    // axis formula d_hyp(i, e^s i) = s, halved
    CHECK(teich_distance(i0, TeichPoint{0, std::exp(2.0)}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(teich_distance(i0, TeichPoint{1, 1}) ==
          doctest::Approx(0.5 * std::acosh(1.5)).epsilon(1e-12));
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        TeichPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
        double ab = teich_distance(a, b);
        CHECK(ab == teich_distance(b, a));
        CHECK(ab == doctest::Approx(half_arccosh_distance(a, b)).epsilon(1e-9));
        CHECK(ab <= teich_distance(a, c) + teich_distance(c, b) + 1e-12);
    }
}

TEST_CASE("extremal length closed-form examples") {
    FoliationVec h = FoliationVec::of_slope(Slope::of(1, 0));
    CHECK(extremal_length(h, TeichPoint{0, 1}) == 1.0);
    CHECK(extremal_length(h, TeichPoint{0, 2}) == 0.5);
    // doubling the weight quadruples the length: ext(2F) = 4 ext(F)
    FoliationVec h2 = FoliationVec::scaled(Slope::of(1, 0), Rational::integer(2));
    CHECK(extremal_length(h2, TeichPoint{0, 1}) == 4.0);
}

TEST_CASE("extremal length scaling law") {
    // In the exactly-representable regime (dyadic weights, dyadic x, power-of-
    // two y, small integers) every intermediate value is a machine number, so
    // the law holds bit for bit.
    std::vector<Rational> weights = {Rational::integer(2), Rational::integer(3),
                                     Rational::of(1, 2), Rational::of(3, 2),
                                     Rational::of(5, 4)};
    std::vector<TeichPoint> taus = {{0, 1}, {0.5, 2}, {-0.75, 0.5}, {0.25, 4}};
    for (const auto& k : weights)
        for (const auto& tau : taus) {
            Slope s = Slope::of(3, 5);
            double base = extremal_length(FoliationVec::of_slope(s), tau);
            double scaled = extremal_length(FoliationVec::scaled(s, k), tau);
            double k2 = k.value() * k.value();
            CHECK(scaled == k2 * base);
        }

    // general rationals and moduli: exact as reals, checked to 1 ulp scale
    Rng rng(23);
    for (int it = 0; it < 200; ++it) {
        TeichPoint tau = random_point(rng);
        Slope s = Slope::of(1 + (i64)rng.below(12), 1 + (i64)rng.below(12));
        Rational k = Rational::of(1 + (i64)rng.below(9), 1 + (i64)rng.below(9));
        double base = extremal_length(FoliationVec::of_slope(s), tau);
        double scaled = extremal_length(FoliationVec::scaled(s, k), tau);
        CHECK(scaled == doctest::Approx(k.value() * k.value() * base).epsilon(1e-14));
    }
}

TEST_CASE("horizontal/vertical pair at the square torus") {
    HVPair p = hv_pair(TeichPoint{0, 1}, 0.0, 1.0);
    CHECK(p.horizontal.a() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(p.horizontal.b() == doctest::Approx(0.0));
    CHECK(p.vertical.a() == doctest::Approx(0.0));
    CHECK(p.vertical.b() == doctest::Approx(1.0).epsilon(1e-15));

    // a half-turn of the differential swaps the roles (up to sign)
    HVPair q = hv_pair(TeichPoint{0, 1}, M_PI, 1.0);
    CHECK(std::abs(q.horizontal.b()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(q.vertical.a()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.horizontal.a() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(q.vertical.b() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("hv_pair intersection equals the norm") {
    Rng rng(37);
    for (int it = 0; it < 2000; ++it) {
        TeichPoint tau = random_point(rng);
        double theta = rng.uniform(0.0, 2 * M_PI);
        double norm = rng.uniform(1e-3, 1.0);
        HVPair p = hv_pair(tau, theta, norm);
        CHECK(intersection(p.horizontal, p.vertical) == doctest::Approx(norm).epsilon(1e-12));
    }
    CHECK_THROWS_AS(hv_pair(TeichPoint{0, 1}, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hv_pair(TeichPoint{0, 1}, 0.0, 1.5), std::invalid_argument);
}

TEST_CASE("vertical ray contracts toward its ideal endpoint") {
    FoliationVec v = FoliationVec::of_slope(Slope::of(0, 1));
    CHECK(ideal_endpoint(v) == 0.0);
    TeichPoint start{0, 1};
    CHECK(ray_point(start, v, 0.0) == start);
    for (double t : {0.25, 1.0, 3.0}) {
        TeichPoint z = ray_point(start, v, t);
        CHECK(z.x == doctest::Approx(0.0));
        CHECK(z.y == doctest::Approx(std::exp(-2.0 * t)).epsilon(1e-12));
    }
}

TEST_CASE("rays are unit speed and satisfy the length-ratio identity") {
    Rng rng(41);
    for (int it = 0; it < 50; ++it) {
        TeichPoint start = random_point(rng);
        FoliationVec v = random_rational_vec(rng);
        double t = rng.uniform(0.0, 10.0);
        TeichPoint z = ray_point(start, v, t);
        CHECK(teich_distance(start, z) == doctest::Approx(t).epsilon(1e-10));
        // the extremal length of the vertical direction decays as e^{-2t}
        double lhs = 0.5 * std::log(extremal_length(v, start) / extremal_length(v, z));
        CHECK(std::abs(t - lhs) < 1e-9);
    }
}

TEST_CASE("geodesic segment spacing and endpoints") {
    auto seg = geodesic_segment(TeichPoint{0, 1}, TeichPoint{0, 4}, 3);
    REQUIRE(seg.size() == 3);
    CHECK(seg[0] == TeichPoint{0, 1});
    CHECK(seg[1].x == doctest::Approx(0.0));
    CHECK(seg[1].y == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(seg[2] == TeichPoint{0, 4});

    auto single = geodesic_segment(TeichPoint{1, 2}, TeichPoint{1, 2}, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == TeichPoint{1, 2});

    Rng rng(53);
    for (int it = 0; it < 40; ++it) {
        TeichPoint a = random_point(rng), b = random_point(rng);
        int n = 2 + (int)rng.below(15);
        auto pts = geodesic_segment(a, b, n);
        REQUIRE((int)pts.size() == n);
        CHECK(pts.front() == a);
        CHECK(pts.back() == b);
        double step = teich_distance(a, b) / (n - 1);
        for (int k = 0; k + 1 < n; ++k)
            CHECK(teich_distance(pts[k], pts[k + 1]) == doctest::Approx(step).epsilon(1e-10));
    }
}

TEST_CASE("segment distance: perpendicular foot on a vertical segment") {
    TeichPoint s{0, 1}, t{0, 4};
    // foot of (1, 2) is at height sqrt(5), inside [1, 4]
    TeichPoint z{1, 2};
    CHECK(teich_segment_distance(z, s, t) ==
          doctest::Approx(0.5 * std::asinh(0.5)).epsilon(1e-15));
    // foot of (1, 8) lands above the segment: nearest endpoint rules
    TeichPoint w{1, 8};
    CHECK(teich_segment_distance(w, s, t) == doctest::Approx(teich_distance(w, t)));
    // a point on the segment has distance zero
    CHECK(teich_segment_distance(TeichPoint{0, 2}, s, t) == 0.0);
}

TEST_CASE("segment distance agrees with dense sampling on circular geodesics") {
    Rng rng(67);
    for (int it = 0; it < 25; ++it) {
        TeichPoint a = random_point(rng), b = random_point(rng), z = random_point(rng);
        if (std::abs(a.x - b.x) < 1e-3) continue;  // vertical covered above
        double exact = teich_segment_distance(z, a, b);
        auto pts = geodesic_segment(a, b, 2000);
        double sampled = teich_distance(z, pts[0]);
        for (const auto& p : pts) sampled = std::min(sampled, teich_distance(z, p));
        CHECK(exact <= sampled + 1e-12);
        CHECK(sampled - exact <= 1e-5);
    }
}

TEST_CASE("thin regions are horoballs") {
    ThinRegion horizontal{Slope::of(1, 0), 0.1};
    CHECK(thin_contains(horizontal, TeichPoint{0, 20}));   // ext = 1/20
    CHECK(!thin_contains(horizontal, TeichPoint{0, 1}));   // ext = 1
    CHECK(thin_contains(horizontal, TeichPoint{0, 10}));   // boundary: ext = 1/10 exactly

    // at the default threshold the horoballs are tangent: the basepoint i lies
    // on the boundary of both the horizontal and the vertical region
    CHECK(thin_contains(ThinRegion{Slope::of(1, 0)}, TeichPoint{0, 1}));
    CHECK(thin_contains(ThinRegion{Slope::of(0, 1)}, TeichPoint{0, 1}));
    CHECK(!thin_contains(ThinRegion{Slope::of(1, 0)}, TeichPoint{0, 0.99}));
}

TEST_CASE("modular group invariance of distance and extremal length") {
    // generators: translation tau -> tau + 1 with (a,b) -> (a-b, b), and the
    // inversion tau -> -1/tau with (a,b) -> (b,-a)
    auto translate = [](const TeichPoint& z) { return TeichPoint{z.x + 1, z.y}; };
    auto invert = [](const TeichPoint& z) {
        double n = z.x * z.x + z.y * z.y;
        return TeichPoint{-z.x / n, z.y / n};
    };
    Rng rng(79);
    for (int it = 0; it < 60; ++it) {
        TeichPoint s = random_point(rng), t = random_point(rng);
        double d = teich_distance(s, t);
        CHECK(teich_distance(translate(s), translate(t)) == doctest::Approx(d).epsilon(1e-9));
        CHECK(teich_distance(invert(s), invert(t)) == doctest::Approx(d).epsilon(1e-9));

        i64 a = (i64)rng.below(15) - 7, b = (i64)rng.below(15) - 7;
        if (a == 0 && b == 0) a = 1;
        FoliationVec f = FoliationVec::of(Rational::integer(a), Rational::integer(b));
        FoliationVec ft = FoliationVec::of(Rational::integer(a - b), Rational::integer(b));
        FoliationVec fi = FoliationVec::of(Rational::integer(b), Rational::integer(-a));
        double ext = extremal_length(f, s);
        CHECK(extremal_length(ft, translate(s)) == doctest::Approx(ext).epsilon(1e-9));
        CHECK(extremal_length(fi, invert(s)) == doctest::Approx(ext).epsilon(1e-9));
    }
}
