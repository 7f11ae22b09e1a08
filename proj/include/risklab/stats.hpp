#pragma once

#include <vector>

namespace risklab {

struct MeanStdErr {
    double mean;
    double std_error;  // sample std / sqrt(n); 0 for n < 2
};

// Fixed-order two-pass reduction: deterministic for any worker count upstream.
MeanStdErr mean_std_error(const std::vector<double>& xs);

struct Moments {
    double mean;
    double std;       // sample std (n-1)
    double skewness;  // population m3 / m2^(3/2); 0 when m2 ~ 0
};

Moments sample_moments(const std::vector<double>& xs);

} // namespace risklab
