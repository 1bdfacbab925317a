#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace aga {

// Fixed-length bitstring genome, one byte per bit, values 0/1.
using BitGenome = std::vector<std::uint8_t>;

// Fixed-length random-key genome; every key lies in [0, 1).
using KeyGenome = std::vector<double>;

using Genome = std::variant<BitGenome, KeyGenome>;

inline std::size_t genome_length(const Genome& genome) {
    return std::visit([](const auto& g) { return g.size(); }, genome);
}

struct Individual {
    Genome genome;
    double cost = 0.0;  // problem cost of the decoded genome, cached at evaluation
};

struct Population {
    std::vector<Individual> members;
    int generation = 0;

    int size() const { return static_cast<int>(members.size()); }
};

}  // namespace aga
