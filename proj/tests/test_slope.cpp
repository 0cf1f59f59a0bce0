#include <doctest.h>

#include <cmath>
#include <vector>

#include "teichlab/continued_fraction.hpp"
#include "teichlab/slope.hpp"

using namespace teichlab;

namespace {

// Independent oracle for torus intersection numbers.  The closed geodesic of
// direction (a, b) lifts to the segment 0 -> (a, b); two such geodesics meet
// once for every lattice translate of one segment that crosses the other,
// i.e. once per solution of  s*(a,b) - t*(c,d) = (m,n)  with s, t in [0,1).
// We count those solutions directly instead of evaluating a determinant.
int lattice_crossings(i64 a, i64 b, i64 c, i64 d) {
    int count = 0;
    i64 mr = std::abs(a) + std::abs(c) + 1;
    i64 nr = std::abs(b) + std::abs(d) + 1;
    for (i64 m = -mr; m <= mr; ++m) {
        for (i64 n = -nr; n <= nr; ++n) {
            // Solve [a -c; b -d] (s, t)^T = (m, n)^T by Cramer's rule.
            i64 det = -a * d + b * c;
            if (det == 0) continue;  // parallel: transversal crossings only
            double s = (double)(-m * d + n * c) / (double)det;
            double t = (double)(a * n - b * m) / (double)det;
            if (s >= 0 && s < 1 && t >= 0 && t < 1) ++count;
        }
    }
    return count;
}

std::vector<Slope> slopes_up_to(i64 bound) {
    std::vector<Slope> out;
    out.push_back(Slope::infinity());
    for (i64 q = 1; q <= bound; ++q)
        for (i64 p = -bound; p <= bound; ++p)
            if (gcd64(p, q) == 1) out.push_back(Slope{p, q});
    return out;
}

}  // namespace

TEST_CASE("slope canonicalization") {
    CHECK(Slope::of(2, 4) == Slope{1, 2});
    CHECK(Slope::of(-2, -4) == Slope{1, 2});
    CHECK(Slope::of(2, -4) == Slope{-1, 2});
    CHECK(Slope::of(0, -5) == Slope{0, 1});
    CHECK(Slope::of(-3, 0) == Slope{1, 0});
    CHECK(Slope::of(7, 0) == Slope::infinity());
    CHECK_THROWS(Slope::of(0, 0));
}

TEST_CASE("slope text form") {
    CHECK(Slope::of(-3, 7).str() == "-3/7");
    CHECK(Slope::infinity().str() == "1/0");
    CHECK(Slope::parse("5/15") == Slope{1, 3});
    CHECK(Slope::parse("-2") == Slope{-2, 1});
    CHECK(Slope::parse("1/0") == Slope::infinity());
    CHECK(!Slope::parse("0/0").has_value());
    CHECK(!Slope::parse("x/2").has_value());
    CHECK(!Slope::parse("1/2/3").has_value());
}

TEST_CASE("intersection of (3,5) and (4,7) matches the lattice-crossing count") {
    int oracle = lattice_crossings(3, 5, 4, 7);
    CHECK(oracle == 1);  // frozen from the oracle
    FoliationVec f = FoliationVec::of(Rational::integer(3), Rational::integer(5));
    FoliationVec g = FoliationVec::of(Rational::integer(4), Rational::integer(7));
    CHECK(intersection(f, g) == (double)oracle);
}

TEST_CASE("intersection matches lattice crossings on a primitive sample") {
    std::vector<std::pair<i64, i64>> dirs = {{1, 0}, {0, 1}, {1, 1},  {1, 2},
                                             {2, 3}, {3, 5}, {-2, 5}, {4, 7}};
    for (auto [a, b] : dirs)
        for (auto [c, d] : dirs) {
            if (a == c && b == d) continue;
            FoliationVec f = FoliationVec::of(Rational::integer(a), Rational::integer(b));
            FoliationVec g = FoliationVec::of(Rational::integer(c), Rational::integer(d));
            CHECK(intersection(f, g) == (double)lattice_crossings(a, b, c, d));
        }
}

TEST_CASE("intersection vanishes exactly on equal slopes (exhaustive |p|,q <= 20)") {
    auto slopes = slopes_up_to(20);
    for (const auto& s : slopes) {
        for (const auto& t : slopes) {
            i64 n = intersection(s, t);
            if (s == t)
                CHECK(n == 0);
            else
                CHECK(n > 0);
        }
    }
}

TEST_CASE("intersection scales exactly with rational weights") {
    Slope s = Slope::of(3, 5), t = Slope::of(4, 7);
    FoliationVec f = FoliationVec::scaled(s, Rational::of(2, 3));
    FoliationVec g = FoliationVec::scaled(t, Rational::of(7, 2));
    // i(2/3 * s, 7/2 * t) = (2/3)(7/2) i(s, t) = 7/3
    CHECK(intersection(f, g) == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
    CHECK(intersection(f, f) == 0.0);
}

TEST_CASE("slope_of recovers slopes from exact input and refuses floats") {
    FoliationVec f = FoliationVec::scaled(Slope::of(2, 3), Rational::of(5, 7));
    auto r = slope_of(f);
    REQUIRE(r.rational);
    CHECK(r.slope == Slope::of(2, 3));

    auto vertical = slope_of(FoliationVec::of_slope(Slope::infinity()));
    REQUIRE(vertical.rational);
    CHECK(vertical.slope == Slope::infinity());

    // golden-ratio direction built from its continued fraction: irrational
    auto golden = ContinuedFraction::periodic(1, {}, {1});
    FoliationVec ir = FoliationVec::irrational(golden.value(), 1.0);
    CHECK(!slope_of(ir).rational);

    FoliationVec fl(0.5, 1.0);
    CHECK_THROWS_AS(slope_of(fl), std::invalid_argument);
}

TEST_CASE("continued fraction text round trip") {
    auto golden = ContinuedFraction::parse("[1;(1)]");
    REQUIRE(golden.has_value());
    CHECK(golden->str() == "[1;(1)]");
    CHECK(!golden->is_rational());

    auto finite = ContinuedFraction::parse("[0;2,2]");
    REQUIRE(finite.has_value());
    CHECK(finite->is_rational());
    CHECK(finite->to_slope() == Slope::of(2, 5));
    CHECK(finite->str() == "[0;2,2]");

    auto mixed = ContinuedFraction::parse("[-2;3,(1,4)]");
    REQUIRE(mixed.has_value());
    CHECK(mixed->str() == "[-2;3,(1,4)]");
    CHECK(mixed->a0() == -2);

    CHECK(!ContinuedFraction::parse("[1;(1)").has_value());
    CHECK(!ContinuedFraction::parse("[1;0]").has_value());
    CHECK(!ContinuedFraction::parse("1;2").has_value());
}

TEST_CASE("golden ratio convergents are consecutive Fibonacci ratios") {
    auto golden = ContinuedFraction::periodic(1, {}, {1});
    auto run = cf_convergents(golden, 6);
    REQUIRE(run.convergents.size() == 6);
    CHECK(!run.truncated);
    std::vector<Slope> expect = {Slope{1, 1}, Slope{2, 1}, Slope{3, 2},
                                 Slope{5, 3}, Slope{8, 5}, Slope{13, 8}};
    CHECK(run.convergents == expect);
    CHECK(golden.value() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
}

TEST_CASE("finite expansions truncate with a flag") {
    auto cf = ContinuedFraction::finite(0, {2, 2});
    auto run = cf_convergents(cf, 10);
    CHECK(run.truncated);
    REQUIRE(run.convergents.size() == 3);
    CHECK(run.convergents.back() == Slope::of(2, 5));
}

TEST_CASE("consecutive convergents are unimodular") {
    auto sqrt2 = ContinuedFraction::periodic(1, {}, {2});
    auto run = cf_convergents(sqrt2, 12);
    for (std::size_t k = 0; k + 1 < run.convergents.size(); ++k)
        CHECK(intersection(run.convergents[k], run.convergents[k + 1]) == 1);
    CHECK(sqrt2.value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}
