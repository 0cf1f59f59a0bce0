#include "teichlab/slope.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <charconv>

namespace teichlab {

Slope Slope::of(i64 p, i64 q) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is undefined");
    i64 g = gcd64(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

double Slope::value() const {
    if (q == 0) return std::numeric_limits<double>::infinity();
    return (double)p / (double)q;
}

std::string Slope::str() const { return std::to_string(p) + "/" + std::to_string(q); }

std::optional<Slope> Slope::parse(std::string_view text) {
    auto slash = text.find('/');
    i64 p = 0, q = 1;
    const char* b = text.data();
    if (slash == std::string_view::npos) {
        auto r = std::from_chars(b, b + text.size(), p);
        if (r.ec != std::errc{} || r.ptr != b + text.size()) return std::nullopt;
    } else {
        auto r1 = std::from_chars(b, b + slash, p);
        if (r1.ec != std::errc{} || r1.ptr != b + slash) return std::nullopt;
        auto r2 = std::from_chars(b + slash + 1, b + text.size(), q);
        if (r2.ec != std::errc{} || r2.ptr != b + text.size()) return std::nullopt;
    }
    if (p == 0 && q == 0) return std::nullopt;
    return Slope::of(p, q);
}

Rational Rational::of(i64 num, i64 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    i64 g = gcd64(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational{num, den};
}

Rational rat_mul(const Rational& a, const Rational& b) {
    // reduce cross-wise before multiplying to keep intermediates small
    i64 g1 = gcd64(a.num, b.den), g2 = gcd64(b.num, a.den);
    return Rational::of(checked_mul(a.num / g1, b.num / g2),
                        checked_mul(a.den / g2, b.den / g1));
}

Rational rat_sub(const Rational& a, const Rational& b) {
    return Rational::of(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
}

FoliationVec::FoliationVec(double a, double b) : a_(a), b_(b), prov_(Provenance::floating) {
    if (a == 0 && b == 0) throw std::invalid_argument("foliation vector must be nonzero");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("foliation vector must be finite");
}

FoliationVec FoliationVec::of(const Rational& a, const Rational& b) {
    if (a.num == 0 && b.num == 0) throw std::invalid_argument("foliation vector must be nonzero");
    FoliationVec f;
    f.a_ = a.value();
    f.b_ = b.value();
    f.ra_ = a;
    f.rb_ = b;
    f.prov_ = Provenance::exact_rational;
    return f;
}

FoliationVec FoliationVec::of_slope(const Slope& s) {
    return of(Rational::integer(s.p), Rational::integer(s.q));
}

FoliationVec FoliationVec::scaled(const Slope& s, const Rational& weight) {
    if (weight.num == 0) throw std::invalid_argument("foliation weight must be nonzero");
    return of(rat_mul(Rational::integer(s.p), weight), rat_mul(Rational::integer(s.q), weight));
}

FoliationVec FoliationVec::irrational(double a, double b) {
    FoliationVec f{a, b};
    f.prov_ = Provenance::exact_irrational;
    return f;
}

double intersection(const FoliationVec& f, const FoliationVec& g) {
    if (f.is_exact_rational() && g.is_exact_rational()) {
        // |a_f b_g - b_f a_g| over a common denominator, exactly
        Rational cross = rat_sub(rat_mul(f.ra(), g.rb()), rat_mul(f.rb(), g.ra()));
        return std::abs(cross.value());
    }
    return std::abs(f.a() * g.b() - f.b() * g.a());
}

i64 intersection(const Slope& a, const Slope& b) {
    i64 d = checked_cross(a.p, a.q, b.p, b.q);
    return d < 0 ? -d : d;
}

SlopeOfResult slope_of(const FoliationVec& f) {
    switch (f.provenance()) {
        case FoliationVec::Provenance::exact_rational: {
            // slope of (a, b) is a/b as a formal ratio: p/q with p*b = q*a
            i64 p = checked_mul(f.ra().num, f.rb().den);
            i64 q = checked_mul(f.rb().num, f.ra().den);
            return SlopeOfResult{true, Slope::of(p, q)};
        }
        case FoliationVec::Provenance::exact_irrational:
            return SlopeOfResult{false, Slope{}};
        case FoliationVec::Provenance::floating:
        default:
            throw std::invalid_argument(
                "slope_of: refusing rationality detection on floating-point input");
    }
}

}  // namespace teichlab
