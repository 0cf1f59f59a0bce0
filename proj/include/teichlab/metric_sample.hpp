#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace teichlab {

// Deterministic RNG used across the library: fixed engine, fixed reduction,
// so identical seeds give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // xorshift* variant; small, portable, plenty for sampling duties
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    double uniform() { return (double)(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

// A finite metric space: points with labels and a dense symmetric distance
// matrix.  Construction validates shape, symmetry, zero diagonal and
// nonnegativity; the triangle inequality is spot-audited separately.
class MetricSample {
  public:
    static MetricSample from_matrix(std::vector<std::string> labels, std::vector<double> matrix);
    static MetricSample from_callable(std::vector<std::string> labels,
                                      const std::function<double(std::size_t, std::size_t)>& fn);

    std::size_t size() const { return n_; }
    double dist(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<double>& matrix() const { return m_; }

    // Largest triangle-inequality violation d(i,k) - d(i,j) - d(j,k) found on
    // `samples` random triples; a valid metric keeps this below ~1e-9.
    double max_triangle_defect(std::uint64_t seed, std::size_t samples) const;

  private:
    MetricSample(std::vector<std::string> labels, std::vector<double> m, std::size_t n)
        : labels_(std::move(labels)), m_(std::move(m)), n_(n) {}
    std::vector<std::string> labels_;
    std::vector<double> m_;
    std::size_t n_ = 0;
};

}  // namespace teichlab
