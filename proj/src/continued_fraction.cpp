#include "teichlab/continued_fraction.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace teichlab {

ContinuedFraction::ContinuedFraction(i64 a0, std::vector<i64> head, std::vector<i64> period)
    : a0_(a0), head_(std::move(head)), period_(std::move(period)) {
    for (i64 t : head_)
        if (t < 1) throw std::invalid_argument("continued fraction terms after a0 must be >= 1");
    for (i64 t : period_)
        if (t < 1) throw std::invalid_argument("continued fraction period terms must be >= 1");
}

ContinuedFraction ContinuedFraction::finite(i64 a0, std::vector<i64> terms) {
    return ContinuedFraction(a0, std::move(terms), {});
}

ContinuedFraction ContinuedFraction::periodic(i64 a0, std::vector<i64> head,
                                              std::vector<i64> period) {
    if (period.empty()) throw std::invalid_argument("periodic continued fraction needs a period");
    return ContinuedFraction(a0, std::move(head), std::move(period));
}

std::size_t ContinuedFraction::finite_length() const {
    if (!is_rational()) throw std::logic_error("finite_length on an infinite expansion");
    return head_.size() + 1;
}

i64 ContinuedFraction::term(std::size_t k) const {
    if (k == 0) return a0_;
    k -= 1;
    if (k < head_.size()) return head_[k];
    k -= head_.size();
    if (period_.empty()) throw std::out_of_range("continued fraction term index out of range");
    return period_[k % period_.size()];
}

double ContinuedFraction::value() const {
    // Evaluate via convergent recursion until the convergents settle;
    // denominators grow at least like Fibonacci so 100 terms is ample.
    double pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
    double p = a0_, q = 1;
    std::size_t limit = is_rational() ? finite_length() : 100;
    double prev = p / q;
    for (std::size_t k = 1; k < limit; ++k) {
        double a = (double)term(k);
        double pn = a * p + pm1, qn = a * q + qm1;
        pm1 = p;
        qm1 = q;
        p = pn;
        q = qn;
        double v = p / q;
        if (v == prev) break;
        prev = v;
    }
    return prev;
}

Slope ContinuedFraction::to_slope() const {
    if (!is_rational()) throw std::logic_error("to_slope on an irrational expansion");
    auto run = cf_convergents(*this, finite_length());
    return run.convergents.back();
}

ConvergentRun cf_convergents(const ContinuedFraction& cf, std::size_t n) {
    ConvergentRun out;
    std::size_t avail = n;
    if (cf.is_rational() && cf.finite_length() < n) {
        avail = cf.finite_length();
        out.truncated = true;
    }
    i64 pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;  // (p, q) at indices -2 and -1
    for (std::size_t k = 0; k < avail; ++k) {
        i64 a = cf.term(k);
        i64 p = checked_add(checked_mul(a, pm1), pm2);
        i64 q = checked_add(checked_mul(a, qm1), qm2);
        pm2 = pm1;
        qm2 = qm1;
        pm1 = p;
        qm1 = q;
        out.convergents.push_back(Slope::of(p, q));
    }
    return out;
}

std::string ContinuedFraction::str() const {
    std::string s = "[" + std::to_string(a0_);
    bool first = true;
    for (i64 t : head_) {
        s += first ? ";" : ",";
        s += std::to_string(t);
        first = false;
    }
    if (!period_.empty()) {
        s += first ? ";(" : ",(";
        for (std::size_t i = 0; i < period_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(period_[i]);
        }
        s += ")";
    }
    s += "]";
    return s;
}

namespace {

bool parse_int(std::string_view text, std::size_t& pos, i64& out) {
    const char* b = text.data() + pos;
    const char* e = text.data() + text.size();
    auto r = std::from_chars(b, e, out);
    if (r.ec != std::errc{}) return false;
    pos += (std::size_t)(r.ptr - b);
    return true;
}

}  // namespace

std::optional<ContinuedFraction> ContinuedFraction::parse(std::string_view text) {
    std::size_t pos = 0;
    auto eat = [&](char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    };
    if (!eat('[')) return std::nullopt;
    i64 a0;
    if (!parse_int(text, pos, a0)) return std::nullopt;
    std::vector<i64> head, period;
    bool in_period = false, closed = false;
    if (eat(';')) {
        while (true) {
            if (!in_period && eat('(')) in_period = true;
            i64 t;
            if (!parse_int(text, pos, t)) return std::nullopt;
            if (t < 1) return std::nullopt;
            (in_period ? period : head).push_back(t);
            if (in_period && eat(')')) {
                closed = true;
                break;
            }
            if (!eat(',')) break;
        }
    }
    if (in_period && !closed) return std::nullopt;
    if (!eat(']') || pos != text.size()) return std::nullopt;
    if (period.empty()) return ContinuedFraction::finite(a0, std::move(head));
    return ContinuedFraction::periodic(a0, std::move(head), std::move(period));
}

}  // namespace teichlab
