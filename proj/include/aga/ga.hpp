#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "aga/genome.hpp"
#include "aga/mutation_policy.hpp"
#include "aga/problems.hpp"
#include "aga/rng.hpp"
#include "aga/stats.hpp"

namespace aga {

struct GaConfig {
    int population_size = 10;
    double crossover_probability = 0.8;
    MutationPolicy mutation_policy = ConstantMutation{0.05};
    int tournament_size = 2;
    int convergence_window = 50;  // generations without best-cost improvement
    int max_generations = 10000;  // safety cap; hitting it flags the trial capped
    int elite_count = 2;          // best parents copied unchanged into each generation
    std::uint64_t rng_seed = 1;
};

// Per-generation snapshot handed to observers and kept in the trial trace.
struct GenerationRecord {
    int generation = 0;
    double best_cost = 0.0;     // best-so-far cost after this generation
    Skewness fitness_skewness;  // fitness-oriented skewness of this generation's costs
};

using GenerationObserver = std::function<void(const GenerationRecord&)>;

struct TrialResult {
    int generations_evolved = 0;
    double lowest_cost = std::numeric_limits<double>::infinity();
    bool optimum_hit = false;
    bool capped = false;
    std::vector<GenerationRecord> trace;  // one record per evolved generation
};

Genome random_genome(const Problem& problem, RandomStream& rng);

// n uniformly random genomes, costs evaluated, generation 0.
Population initialize_population(const Problem& problem, int n, RandomStream& rng);

// k uniform draws with replacement; lowest cost wins, ties go to the first drawn.
const Individual& tournament_select(const Population& pop, int k, RandomStream& rng);

// Cut point uniform in {1..L-1}; applies to bit and key genomes alike.
std::pair<Genome, Genome> one_point_crossover(const Genome& a, const Genome& b, RandomStream& rng);

// Gene-wise application of a per-chromosome rate: each bit flips (each key is
// redrawn from [0,1)) independently with probability p.
Genome mutate(Genome genome, double p, RandomStream& rng);

// Gene-wise random reset: each gene is independently rewritten with probability
// p by a fresh uniform draw (bits become a coin flip, keys a fresh key). On bit
// genomes half of the rewrites reproduce the old allele, so the effective flip
// rate is p/2.
Genome randomize_genes(Genome genome, double p, RandomStream& rng);

// Whole-chromosome mutation event: with probability p, one uniformly chosen
// gene changes (bit flipped, key redrawn).
Genome point_mutation(Genome genome, double p, RandomStream& rng);

// Full generational replacement: the elite_count best parents are copied
// unchanged, the rest of the next generation is bred by tournament selection
// and one-point crossover. Offspring are evaluated first; each then mutates at
// its own policy rate, computed over the evaluated offspring pool (constant
// policy -> point_mutation, adaptive policies -> randomize_genes), and is
// re-evaluated.
Population next_generation(const Population& pop, const GaConfig& cfg, const Problem& problem,
                           RandomStream& rng);

// Evolves until the best-so-far cost has not improved for convergence_window
// consecutive generations, or until max_generations (capped). The observer, if
// set, fires once per evolved generation.
TrialResult run_until_converged(const GaConfig& cfg, const Problem& problem,
                                const GenerationObserver& observer = {});

}  // namespace aga
