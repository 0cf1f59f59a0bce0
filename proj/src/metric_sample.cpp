#include "teichlab/metric_sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace teichlab {

namespace {
constexpr std::size_t kMaxPoints = 8000;  // 8000^2 doubles = 512 MB, the ceiling
}

MetricSample MetricSample::from_matrix(std::vector<std::string> labels,
                                       std::vector<double> matrix) {
    std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("metric sample needs at least one point");
    if (n > kMaxPoints)
        throw std::invalid_argument("metric sample too large (" + std::to_string(n) + " points)");
    if (matrix.size() != n * n) throw std::invalid_argument("distance matrix must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i * n + i] != 0.0)
            throw std::invalid_argument("distance matrix must have zero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            double d = matrix[i * n + j];
            if (!std::isfinite(d) || d < 0)
                throw std::invalid_argument("distances must be finite and nonnegative");
            if (d != matrix[j * n + i])
                throw std::invalid_argument("distance matrix must be symmetric");
        }
    }
    return MetricSample(std::move(labels), std::move(matrix), n);
}

MetricSample MetricSample::from_callable(
    std::vector<std::string> labels, const std::function<double(std::size_t, std::size_t)>& fn) {
    std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("metric sample needs at least one point");
    if (n > kMaxPoints)
        throw std::invalid_argument("metric sample too large (" + std::to_string(n) + " points)");
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = fn(i, j);
            if (!std::isfinite(d) || d < 0)
                throw std::invalid_argument("distances must be finite and nonnegative");
            m[i * n + j] = d;
            m[j * n + i] = d;
        }
    return MetricSample(std::move(labels), std::move(m), n);
}

double MetricSample::max_triangle_defect(std::uint64_t seed, std::size_t samples) const {
    if (n_ < 3) return 0.0;
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t i = rng.below(n_), j = rng.below(n_), k = rng.below(n_);
        double defect = dist(i, k) - dist(i, j) - dist(j, k);
        if (defect > worst) worst = defect;
    }
    return worst;
}

}  // namespace teichlab
