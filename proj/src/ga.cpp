#include "aga/ga.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace aga {

Genome random_genome(const Problem& problem, RandomStream& rng) {
    if (problem.kind == GenomeKind::bits) {
        BitGenome bits(problem.genome_length);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
        return bits;
    }
    KeyGenome keys(problem.genome_length);
    for (auto& k : keys) k = rng.uniform01();
    return keys;
}

Population initialize_population(const Problem& problem, int n, RandomStream& rng) {
    if (n < 2) throw std::invalid_argument("initialize_population: population size must be >= 2");
    Population pop;
    pop.members.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Individual ind;
        ind.genome = random_genome(problem, rng);
        ind.cost = problem.cost(ind.genome);
        pop.members.push_back(std::move(ind));
    }
    return pop;
}

namespace {

int tournament_index(const Population& pop, int k, RandomStream& rng) {
    const auto n = static_cast<std::uint64_t>(pop.members.size());
    int best = static_cast<int>(rng.below(n));
    for (int i = 1; i < k; ++i) {
        const int candidate = static_cast<int>(rng.below(n));
        if (pop.members[candidate].cost < pop.members[best].cost) best = candidate;
    }
    return best;
}

double population_best_cost(const Population& pop) {
    double best = pop.members.front().cost;
    for (const Individual& ind : pop.members) best = std::min(best, ind.cost);
    return best;
}

}  // namespace

const Individual& tournament_select(const Population& pop, int k, RandomStream& rng) {
    assert(k >= 1 && !pop.members.empty());
    return pop.members[tournament_index(pop, k, rng)];
}

std::pair<Genome, Genome> one_point_crossover(const Genome& a, const Genome& b,
                                              RandomStream& rng) {
    if (a.index() != b.index() || genome_length(a) != genome_length(b) || genome_length(a) < 2)
        throw std::logic_error("one_point_crossover: genomes must share variant and length >= 2");
    const std::size_t len = genome_length(a);
    const auto cut =
        static_cast<std::ptrdiff_t>(1 + rng.below(static_cast<std::uint64_t>(len) - 1));
    return std::visit(
        [&](const auto& first) -> std::pair<Genome, Genome> {
            using G = std::decay_t<decltype(first)>;
            const auto& second = std::get<G>(b);
            G child1 = first;
            G child2 = second;
            std::copy(second.begin() + cut, second.end(), child1.begin() + cut);
            std::copy(first.begin() + cut, first.end(), child2.begin() + cut);
            return {Genome{std::move(child1)}, Genome{std::move(child2)}};
        },
        a);
}

Genome mutate(Genome genome, double p, RandomStream& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::logic_error("mutate: probability outside [0, 1]");
    if (auto* bits = std::get_if<BitGenome>(&genome)) {
        for (auto& bit : *bits)
            if (rng.bernoulli(p)) bit ^= 1u;
    } else {
        for (auto& key : std::get<KeyGenome>(genome))
            if (rng.bernoulli(p)) key = rng.uniform01();
    }
    return genome;
}

Genome randomize_genes(Genome genome, double p, RandomStream& rng) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::logic_error("randomize_genes: probability outside [0, 1]");
    if (auto* bits = std::get_if<BitGenome>(&genome)) {
        for (auto& bit : *bits)
            if (rng.bernoulli(p)) bit = static_cast<std::uint8_t>(rng.below(2));
    } else {
        for (auto& key : std::get<KeyGenome>(genome))
            if (rng.bernoulli(p)) key = rng.uniform01();
    }
    return genome;
}

Genome point_mutation(Genome genome, double p, RandomStream& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::logic_error("point_mutation: probability outside [0, 1]");
    if (!rng.bernoulli(p)) return genome;
    if (auto* bits = std::get_if<BitGenome>(&genome)) {
        (*bits)[rng.below(bits->size())] ^= 1u;
    } else {
        auto& keys = std::get<KeyGenome>(genome);
        keys[rng.below(keys.size())] = rng.uniform01();
    }
    return genome;
}

Population next_generation(const Population& pop, const GaConfig& cfg, const Problem& problem,
                           RandomStream& rng) {
    assert(!pop.members.empty());
    const int n = pop.size();

    Population next;
    next.generation = pop.generation + 1;
    next.members.reserve(static_cast<std::size_t>(n));

    // elites keep ties in member order so replay is exact
    const int elites = std::min(cfg.elite_count, n - 1);
    if (elites > 0) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return pop.members[static_cast<std::size_t>(a)].cost <
                   pop.members[static_cast<std::size_t>(b)].cost;
        });
        for (int e = 0; e < elites; ++e)
            next.members.push_back(pop.members[static_cast<std::size_t>(order[static_cast<std::size_t>(e)])]);
    }

    auto emit = [&](Genome child) {
        Individual offspring;
        offspring.genome = std::move(child);
        offspring.cost = problem.cost(offspring.genome);
        next.members.push_back(std::move(offspring));
    };

    while (next.size() < n) {
        const int first = tournament_index(pop, cfg.tournament_size, rng);
        const int second = tournament_index(pop, cfg.tournament_size, rng);
        Genome child1 = pop.members[static_cast<std::size_t>(first)].genome;
        Genome child2 = pop.members[static_cast<std::size_t>(second)].genome;
        if (rng.bernoulli(cfg.crossover_probability)) {
            auto [c1, c2] = one_point_crossover(child1, child2, rng);
            child1 = std::move(c1);
            child2 = std::move(c2);
        }
        emit(std::move(child1));
        if (next.size() < n) emit(std::move(child2));
    }

    // rates come from the evaluated offspring pool; elites are exempt
    const std::vector<double> rates = mutation_probabilities(next, cfg.mutation_policy, rng);
    const bool constant_policy = std::holds_alternative<ConstantMutation>(cfg.mutation_policy);
    for (int i = elites; i < n; ++i) {
        auto& member = next.members[static_cast<std::size_t>(i)];
        const double rate = rates[static_cast<std::size_t>(i)];
        member.genome = constant_policy ? point_mutation(std::move(member.genome), rate, rng)
                                        : randomize_genes(std::move(member.genome), rate, rng);
        member.cost = problem.cost(member.genome);
    }
    return next;
}

TrialResult run_until_converged(const GaConfig& cfg, const Problem& problem,
                                const GenerationObserver& observer) {
    RandomStream rng(cfg.rng_seed);
    Population pop = initialize_population(problem, cfg.population_size, rng);

    TrialResult result;
    result.lowest_cost = population_best_cost(pop);

    std::vector<double> costs(pop.members.size());
    int stagnant = 0;
    while (stagnant < cfg.convergence_window && pop.generation < cfg.max_generations) {
        pop = next_generation(pop, cfg, problem, rng);
        const double generation_best = population_best_cost(pop);
        if (generation_best < result.lowest_cost) {
            result.lowest_cost = generation_best;
            stagnant = 0;
        } else {
            ++stagnant;
        }

        GenerationRecord record;
        record.generation = pop.generation;
        record.best_cost = result.lowest_cost;
        for (std::size_t i = 0; i < pop.members.size(); ++i) costs[i] = pop.members[i].cost;
        // fitness = worst - cost is an affine reflection, so the fitness-oriented
        // skewness is the negated cost skewness
        const Skewness cost_skew = population_skewness(costs);
        record.fitness_skewness.degenerate = cost_skew.degenerate;
        record.fitness_skewness.value = cost_skew.value == 0.0 ? 0.0 : -cost_skew.value;
        if (observer) observer(record);
        result.trace.push_back(record);
    }

    result.generations_evolved = pop.generation;
    result.capped = stagnant < cfg.convergence_window;
    result.optimum_hit = problem.optimum.achieved(result.lowest_cost);
    return result;
}

}  // namespace aga
