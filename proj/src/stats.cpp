#include "risklab/stats.hpp"

#include <cmath>

#include "risklab/errors.hpp"

namespace risklab {

MeanStdErr mean_std_error(const std::vector<double>& xs) {
    if (xs.empty()) throw DomainError("mean_std_error needs a non-empty sample");
    const auto n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double v : xs) sum += v;
    const double mean = sum / n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double v : xs) {
        const double d = v - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

Moments sample_moments(const std::vector<double>& xs) {
    if (xs.empty()) throw DomainError("sample_moments needs a non-empty sample");
    const auto n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double v : xs) sum += v;
    const double mean = sum / n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : xs) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    const double std_dev = xs.size() < 2 ? 0.0 : std::sqrt(m2 * n / (n - 1.0));
    const double skew = m2 > 1e-300 ? m3 / std::pow(m2, 1.5) : 0.0;
    return {mean, std_dev, skew};
}

} // namespace risklab
