#pragma once

#include <span>
#include <variant>
#include <vector>

#include "aga/genome.hpp"
#include "aga/rng.hpp"

namespace aga {

struct ConstantMutation {
    double p = 0.05;
};

struct FitnessAdaptiveMutation {
    double p_max = 0.1;
};

struct RankAdaptiveMutation {
    double p_max = 0.1;
};

// Per-chromosome mutation rate strategy. The engine computes one rate per
// individual each generation and applies it gene-wise; p_max stays constant
// across generations.
using MutationPolicy =
    std::variant<ConstantMutation, FitnessAdaptiveMutation, RankAdaptiveMutation>;

const char* policy_name(const MutationPolicy& policy);  // "sga" | "fitness" | "rank"
double policy_rate(const MutationPolicy& policy);       // p or p_max

// Cost-to-fitness bridge for minimization problems: fitness = worst_cost - cost.
// The population best attains the maximum fitness, the worst attains zero.
double fitness_of(double cost, double population_worst_cost);

// p = p_max * (1 - f / f_max). A population with f_max = 0 (all costs equal)
// yields p_max for every individual so a collapsed population keeps exploring.
double fitness_adaptive_p(double fitness, double max_fitness, double p_max);

// ranks[i] is the rank of individual i: a permutation of 1..N where 1 is the
// poorest and N the fittest. Tied fitness values receive their contested block
// of ranks in uniformly random order drawn from the trial's stream.
std::vector<int> assign_ranks(std::span<const double> fitnesses, RandomStream& rng);

// p = p_max * (1 - (r - 1) / (n - 1)): linear in rank, zero for the fittest,
// p_max for the poorest. A single-individual population gets 0.
double rank_adaptive_p(int rank, int n, double p_max);

// One mutation rate per population member under the given policy.
std::vector<double> mutation_probabilities(const Population& pop, const MutationPolicy& policy,
                                           RandomStream& rng);

}  // namespace aga
