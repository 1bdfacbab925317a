#pragma once

#include <cstdint>
#include <random>

namespace aga {

// SplitMix64 finalizer. Derives uncorrelated per-trial seeds from (base_seed, trial index).
constexpr std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
    std::uint64_t z = base_seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded random stream backing one GA trial. Never shared across threads.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound), bound > 0. Rejection keeps the draw unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return draw % bound;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace aga
