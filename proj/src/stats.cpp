#include "aga/stats.hpp"

#include <cmath>

namespace aga {

Skewness population_skewness(std::span<const double> sample) {
    const std::size_t n = sample.size();
    if (n < 3) return {0.0, true};

    double mean = 0.0;
    for (double x : sample) mean += x;
    mean /= static_cast<double>(n);

    double sq = 0.0;
    for (double x : sample) {
        const double d = x - mean;
        sq += d * d;
    }
    const double variance = sq / static_cast<double>(n - 1);
    if (variance <= 0.0) return {0.0, true};

    const double s = std::sqrt(variance);
    double cubes = 0.0;
    for (double x : sample) {
        const double z = (x - mean) / s;
        cubes += z * z * z;
    }
    const double nd = static_cast<double>(n);
    return {nd / ((nd - 1.0) * (nd - 2.0)) * cubes, false};
}

}  // namespace aga
