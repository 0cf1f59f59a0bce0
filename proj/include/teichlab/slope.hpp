#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "teichlab/ints.hpp"

namespace teichlab {

// A slope p/q in lowest terms.  Canonical form: gcd(|p|, q) = 1 and q > 0,
// except the slope at infinity which is stored as 1/0.  Values cover all of
// Q together with the single point at infinity.
struct Slope {
    i64 p = 0;
    i64 q = 1;

    static Slope of(i64 p, i64 q);  // canonicalizes; throws on (0, 0)
    static Slope infinity() { return Slope{1, 0}; }

    bool is_infinite() const { return q == 0; }
    double value() const;  // p/q, +inf for the infinite slope

    std::string str() const;  // "p/q", e.g. "-3/7", "1/0"
    static std::optional<Slope> parse(std::string_view text);

    friend bool operator==(const Slope&, const Slope&) = default;
};

// Ordering used for deterministic tie-breaks: by (q, p).
inline bool qp_less(const Slope& a, const Slope& b) {
    return a.q != b.q ? a.q < b.q : a.p < b.p;
}

struct SlopeHash {
    std::size_t operator()(const Slope& s) const {
        std::uint64_t k = (std::uint64_t)(std::uint32_t)(std::int32_t)s.p << 32 |
                          (std::uint32_t)(std::int32_t)s.q;
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return (std::size_t)k;
    }
};

// Small exact rational, canonical (den > 0, lowest terms).
struct Rational {
    i64 num = 0;
    i64 den = 1;

    static Rational of(i64 num, i64 den);  // throws on den = 0
    static Rational integer(i64 n) { return Rational{n, 1}; }
    double value() const { return (double)num / (double)den; }

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational rat_mul(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);

// A measured foliation on the torus, identified with a direction vector
// (a, b): leaves of slope -a/b, transverse measure |dx·b - dy·a| scaled so
// that intersection numbers come out as 2x2 determinants.
//
// Exactness is tracked by provenance: vectors built from slopes, integer or
// rational data carry exact rational components and support exact slope
// recovery; vectors built from raw floating-point data do not, and vectors
// built from an infinite continued-fraction target are marked irrational.
class FoliationVec {
  public:
    enum class Provenance { exact_rational, exact_irrational, floating };

    FoliationVec(double a, double b);                       // floating provenance
    static FoliationVec of(const Rational& a, const Rational& b);
    static FoliationVec of_slope(const Slope& s);           // (p, q), exact
    static FoliationVec scaled(const Slope& s, const Rational& weight);
    static FoliationVec irrational(double a, double b);     // exact-irrational marker

    double a() const { return a_; }
    double b() const { return b_; }
    Provenance provenance() const { return prov_; }
    bool is_exact_rational() const { return prov_ == Provenance::exact_rational; }

    // Exact components; only valid for exact_rational provenance.
    const Rational& ra() const { return ra_; }
    const Rational& rb() const { return rb_; }

  private:
    FoliationVec() = default;
    double a_ = 0, b_ = 0;
    Rational ra_, rb_;
    Provenance prov_ = Provenance::floating;
};

// Geometric intersection number |a_F b_G - b_F a_G|.  Computed in exact
// integer arithmetic when both inputs are exact rationals (the result is then
// an exactly representable rational), in double arithmetic otherwise.
double intersection(const FoliationVec& f, const FoliationVec& g);

// Exact intersection number of two slopes: |p1 q2 - p2 q1|.
i64 intersection(const Slope& a, const Slope& b);

// Result of slope recovery on a foliation vector.
struct SlopeOfResult {
    bool rational = false;
    Slope slope;  // valid iff rational
};

// Recovers the underlying slope of a foliation vector.  Exact-rational input
// yields its slope; exact-irrational input yields the irrational marker.
// Floating input is refused (throws std::invalid_argument): equality of reals
// cannot be decided from rounded data.
SlopeOfResult slope_of(const FoliationVec& f);

}  // namespace teichlab
