#include "aga/mutation_policy.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace aga {

const char* policy_name(const MutationPolicy& policy) {
    if (std::holds_alternative<ConstantMutation>(policy)) return "sga";
    if (std::holds_alternative<FitnessAdaptiveMutation>(policy)) return "fitness";
    return "rank";
}

double policy_rate(const MutationPolicy& policy) {
    struct Rate {
        double operator()(const ConstantMutation& m) const { return m.p; }
        double operator()(const FitnessAdaptiveMutation& m) const { return m.p_max; }
        double operator()(const RankAdaptiveMutation& m) const { return m.p_max; }
    };
    return std::visit(Rate{}, policy);
}

double fitness_of(double cost, double population_worst_cost) {
    if (cost > population_worst_cost)
        throw std::logic_error("fitness_of: cost exceeds the population worst");
    return population_worst_cost - cost;
}

double fitness_adaptive_p(double fitness, double max_fitness, double p_max) {
    if (fitness < 0.0 || fitness > max_fitness)
        throw std::logic_error("fitness_adaptive_p: fitness outside [0, f_max]");
    if (max_fitness == 0.0) return p_max;
    return p_max * (1.0 - fitness / max_fitness);
}

std::vector<int> assign_ranks(std::span<const double> fitnesses, RandomStream& rng) {
    const int n = static_cast<int>(fitnesses.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Fisher-Yates shuffle followed by a stable sort: tied fitnesses keep the
    // shuffled order, so each contested rank block lands uniformly at random.
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fitnesses[a] < fitnesses[b]; });
    std::vector<int> ranks(n);
    for (int k = 0; k < n; ++k) ranks[order[k]] = k + 1;
    return ranks;
}

double rank_adaptive_p(int rank, int n, double p_max) {
    if (n == 1) return 0.0;  // the sole individual is the best
    if (rank < 1 || rank > n) throw std::logic_error("rank_adaptive_p: rank outside [1, N]");
    return p_max * (1.0 - static_cast<double>(rank - 1) / static_cast<double>(n - 1));
}

std::vector<double> mutation_probabilities(const Population& pop, const MutationPolicy& policy,
                                           RandomStream& rng) {
    assert(!pop.members.empty());
    const int n = pop.size();
    std::vector<double> rates(n);

    if (const auto* constant = std::get_if<ConstantMutation>(&policy)) {
        std::fill(rates.begin(), rates.end(), constant->p);
        return rates;
    }

    double worst = pop.members.front().cost;
    double best = worst;
    for (const Individual& ind : pop.members) {
        worst = std::max(worst, ind.cost);
        best = std::min(best, ind.cost);
    }

    if (const auto* adaptive = std::get_if<FitnessAdaptiveMutation>(&policy)) {
        const double max_fitness = fitness_of(best, worst);
        for (int i = 0; i < n; ++i) {
            const double f = fitness_of(pop.members[i].cost, worst);
            rates[i] = fitness_adaptive_p(f, max_fitness, adaptive->p_max);
        }
        return rates;
    }

    const auto& ranked = std::get<RankAdaptiveMutation>(policy);
    std::vector<double> fitnesses(n);
    for (int i = 0; i < n; ++i) fitnesses[i] = worst - pop.members[i].cost;
    const std::vector<int> ranks = assign_ranks(fitnesses, rng);
    for (int i = 0; i < n; ++i) rates[i] = rank_adaptive_p(ranks[i], n, ranked.p_max);
    return rates;
}

}  // namespace aga
