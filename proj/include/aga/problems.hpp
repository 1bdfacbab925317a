#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "aga/genome.hpp"
#include "aga/tsplib.hpp"

namespace aga {

enum class GenomeKind { bits, keys };

struct OptimumTarget {
    double cost = 0.0;
    double absolute_tolerance = 0.0;
    double relative_tolerance = 0.0;

    bool achieved(double candidate) const {
        return candidate <= cost + absolute_tolerance + relative_tolerance * cost;
    }
};

// A benchmark problem: genome shape, decode + cost evaluation, and the target
// that counts as hitting the global optimum.
struct Problem {
    std::string name;
    GenomeKind kind = GenomeKind::bits;
    std::size_t genome_length = 0;
    std::function<double(const Genome&)> cost;
    OptimumTarget optimum;
    std::uint64_t checksum = 0;  // content digest echoed into result files
};

// Maps each group of bits_per_var bits (most significant first) linearly onto
// [lo, hi]: x = lo + value * (hi - lo) / (2^bits_per_var - 1). All-zero groups
// decode to exactly lo, all-one groups to exactly hi.
std::vector<double> decode_binary(std::span<const std::uint8_t> bits, std::size_t bits_per_var,
                                  double lo, double hi);

// Sphere cost over three variables in [-5.12, 5.12]: sum of squares.
double f1_cost(std::span<const double> x);

// Bivariate multimodal cost over [0, 40.95]^2 with the global minimum 0 at the
// origin: with s = x1^2 + x2^2, cost = s^0.25 * (sin^2(50 * s^0.1) + 1).
double f7_cost(std::span<const double> x);

// Visits cities in ascending key order; equal keys fall back to city index.
std::vector<int> decode_random_key(std::span<const double> keys);

// rounded_euclidean applies the TSPLIB EUC_2D nearest-integer edge convention.
enum class TspMetric { euclidean, rounded_euclidean };

// Length of the closed cycle, return edge included.
double tour_cost(std::span<const int> tour, const TspInstance& instance,
                 TspMetric metric = TspMetric::euclidean);

Problem make_f1();
Problem make_f7();
Problem make_tsp(TspInstance instance, OptimumTarget optimum,
                 TspMetric metric = TspMetric::euclidean);

// Best-known tour length of the bundled wi29 instance under the unrounded
// metric (27603 under TSPLIB rounding), plus the instance digest used to
// recognize it when no explicit optimum target is configured.
inline constexpr double wi29_optimal_cost = 27601.173774493753;
std::uint64_t wi29_checksum();

// Default optimum targets: |cost| <= 1e-4 for the binary benchmarks (their bit
// grids cannot represent an exact interior 0), relative 1e-6 band for tours.
OptimumTarget default_binary_target();
OptimumTarget tsp_target(double optimal_cost);

}  // namespace aga
