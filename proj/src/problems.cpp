#include "aga/problems.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aga/checksum.hpp"

namespace aga {

std::vector<double> decode_binary(std::span<const std::uint8_t> bits, std::size_t bits_per_var,
                                  double lo, double hi) {
    if (bits_per_var == 0 || bits_per_var > 52 || bits.size() % bits_per_var != 0)
        throw std::invalid_argument("decode_binary: genome length not divisible by bits_per_var");
    const std::uint64_t max_value = (std::uint64_t{1} << bits_per_var) - 1;
    std::vector<double> xs;
    xs.reserve(bits.size() / bits_per_var);
    for (std::size_t start = 0; start < bits.size(); start += bits_per_var) {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < bits_per_var; ++i) value = (value << 1) | (bits[start + i] & 1u);
        if (value == max_value) {
            xs.push_back(hi);  // keep the upper endpoint exact
        } else {
            xs.push_back(lo + static_cast<double>(value) * (hi - lo) / static_cast<double>(max_value));
        }
    }
    return xs;
}

double f1_cost(std::span<const double> x) {
    assert(x.size() == 3);
    double total = 0.0;
    for (double v : x) {
        assert(v >= -5.12 && v <= 5.12);
        total += v * v;
    }
    return total;
}

double f7_cost(std::span<const double> x) {
    assert(x.size() == 2);
    assert(x[0] >= 0.0 && x[0] <= 40.95 && x[1] >= 0.0 && x[1] <= 40.95);
    const double s = x[0] * x[0] + x[1] * x[1];
    const double sine = std::sin(50.0 * std::pow(s, 0.1));
    return std::pow(s, 0.25) * (sine * sine + 1.0);
}

std::vector<int> decode_random_key(std::span<const double> keys) {
    std::vector<int> tour(keys.size());
    std::iota(tour.begin(), tour.end(), 0);
    std::stable_sort(tour.begin(), tour.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    return tour;
}

double tour_cost(std::span<const int> tour, const TspInstance& instance, TspMetric metric) {
    assert(static_cast<int>(tour.size()) == instance.dimension());
    const std::size_t n = tour.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const City& a = instance.cities[static_cast<std::size_t>(tour[i])];
        const City& b = instance.cities[static_cast<std::size_t>(tour[(i + 1) % n])];
        const double d = std::hypot(a.x - b.x, a.y - b.y);
        total += metric == TspMetric::rounded_euclidean ? std::floor(d + 0.5) : d;
    }
    return total;
}

std::uint64_t wi29_checksum() { return 0x1b88cac0aadfc81bULL; }

OptimumTarget default_binary_target() { return {0.0, 1e-4, 0.0}; }

OptimumTarget tsp_target(double optimal_cost) { return {optimal_cost, 0.0, 1e-6}; }

Problem make_f1() {
    Problem p;
    p.name = "f1";
    p.kind = GenomeKind::bits;
    p.genome_length = 30;
    p.cost = [](const Genome& g) {
        return f1_cost(decode_binary(std::get<BitGenome>(g), 10, -5.12, 5.12));
    };
    p.optimum = default_binary_target();
    p.checksum = Fnv1a64{}.mix("f1/3x10bit/-5.12..5.12").digest();
    return p;
}

Problem make_f7() {
    Problem p;
    p.name = "f7";
    p.kind = GenomeKind::bits;
    p.genome_length = 24;
    p.cost = [](const Genome& g) {
        return f7_cost(decode_binary(std::get<BitGenome>(g), 12, 0.0, 40.95));
    };
    p.optimum = default_binary_target();
    p.checksum = Fnv1a64{}.mix("f7/2x12bit/0..40.95").digest();
    return p;
}

Problem make_tsp(TspInstance instance, OptimumTarget optimum, TspMetric metric) {
    if (instance.dimension() < 2) throw std::invalid_argument("make_tsp: instance needs >= 2 cities");
    Problem p;
    p.name = instance.name.empty() ? "tsp" : instance.name;
    p.kind = GenomeKind::keys;
    p.genome_length = static_cast<std::size_t>(instance.dimension());
    p.checksum = instance_checksum(instance);
    p.optimum = optimum;
    p.cost = [inst = std::move(instance), metric](const Genome& g) {
        return tour_cost(decode_random_key(std::get<KeyGenome>(g)), inst, metric);
    };
    return p;
}

}  // namespace aga
