#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teichlab/slope.hpp"

namespace teichlab {

// Continued fraction [a0; a1, a2, ...] with integer a0 and partial quotients
// a_i >= 1 for i >= 1.  A nonempty period makes the expansion eventually
// periodic (a quadratic irrational); an empty period means the expansion is
// finite and the value rational.
//
// Text form: "[a0;a1,a2,...]" with the periodic tail in parentheses, e.g.
// "[1;(1)]" for the golden ratio, "[0;2,2]" for 5/12, "[1;2,(3,4)]".
class ContinuedFraction {
  public:
    static ContinuedFraction finite(i64 a0, std::vector<i64> terms = {});
    static ContinuedFraction periodic(i64 a0, std::vector<i64> head, std::vector<i64> period);

    static std::optional<ContinuedFraction> parse(std::string_view text);
    std::string str() const;

    bool is_rational() const { return period_.empty(); }

    // Number of partial quotients of a finite expansion, counting a0.
    std::size_t finite_length() const;

    // k-th partial quotient (k = 0 gives a0); unrolls the period.
    // Throws std::out_of_range past the end of a finite expansion.
    i64 term(std::size_t k) const;

    // Numeric value; for infinite expansions, evaluated to double precision.
    double value() const;

    // Exact value of a finite expansion as a slope (final convergent).
    Slope to_slope() const;  // throws std::logic_error if not rational

    const std::vector<i64>& head() const { return head_; }
    const std::vector<i64>& period() const { return period_; }
    i64 a0() const { return a0_; }

  private:
    ContinuedFraction(i64 a0, std::vector<i64> head, std::vector<i64> period);
    i64 a0_ = 0;
    std::vector<i64> head_;    // partial quotients after a0, before the period
    std::vector<i64> period_;  // empty for rational values
};

struct ConvergentRun {
    std::vector<Slope> convergents;  // p_0/q_0, ..., in lowest terms
    bool truncated = false;          // expansion ended before n convergents
};

// First n convergents p_k/q_k of the expansion.  If a finite expansion runs
// out early, all its convergents are returned and `truncated` is set.
ConvergentRun cf_convergents(const ContinuedFraction& cf, std::size_t n);

}  // namespace teichlab
