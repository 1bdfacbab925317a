#pragma once

#include <span>

namespace aga {

struct Skewness {
    double value = 0.0;
    bool degenerate = false;  // n < 3 or zero sample variance
};

// Adjusted Fisher-Pearson standardized moment coefficient
//   G1 = n / ((n-1)(n-2)) * sum(((x_i - mean) / s)^3)
// with s the (n-1) sample standard deviation. Degenerate samples report 0
// with the flag set instead of NaN.
Skewness population_skewness(std::span<const double> sample);

}  // namespace aga
