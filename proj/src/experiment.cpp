#include "aga/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "aga/format.hpp"
#include "aga/plot.hpp"

namespace aga {

namespace {

TrialResult run_one_trial(const CampaignConfig& cfg, int index) {
    GaConfig ga = cfg.ga;
    ga.rng_seed = trial_seed(cfg.base_seed, index);
    return run_until_converged(ga, cfg.problem);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg, const ProgressSink& progress) {
    if (cfg.trials < 1) throw std::invalid_argument("run_campaign: trials must be >= 1");
    std::vector<TrialResult> results(static_cast<std::size_t>(cfg.trials));

    if (cfg.workers <= 1) {
        for (int i = 0; i < cfg.trials; ++i) {
            results[static_cast<std::size_t>(i)] = run_one_trial(cfg, i);
            if (progress) progress(i + 1, cfg.trials);
        }
    } else {
#ifdef _OPENMP
        int completed = 0;
#pragma omp parallel for schedule(dynamic) num_threads(cfg.workers)
        for (int i = 0; i < cfg.trials; ++i) {
            results[static_cast<std::size_t>(i)] = run_one_trial(cfg, i);
            if (progress) {
#pragma omp critical
                progress(++completed, cfg.trials);
            }
        }
#else
        for (int i = 0; i < cfg.trials; ++i) {
            results[static_cast<std::size_t>(i)] = run_one_trial(cfg, i);
            if (progress) progress(i + 1, cfg.trials);
        }
#endif
    }

    CampaignResult out;
    out.config = cfg;
    out.stats = aggregate_stats(results);
    out.trials = std::move(results);
    return out;
}

CampaignStats aggregate_stats(std::span<const TrialResult> trials) {
    CampaignStats stats;
    if (trials.empty()) return stats;
    double generations = 0.0;
    double costs = 0.0;
    for (const TrialResult& t : trials) {
        generations += t.generations_evolved;
        costs += t.lowest_cost;
        if (t.optimum_hit) ++stats.optimum_count;
        stats.max_generations = std::max(stats.max_generations, t.generations_evolved);
    }
    const auto n = static_cast<double>(trials.size());
    stats.avg_generations = generations / n;
    stats.avg_lowest_cost = costs / n;
    stats.optimum_pct = 100.0 * stats.optimum_count / n;
    return stats;
}

void write_summary_csv(std::ostream& out, std::span<const CampaignResult> campaigns) {
    out << "campaign,problem,policy,mutation_rate,population,trials,"
           "avg_generations,avg_lowest_cost,optimum_count,max_generations,optimum_pct,"
           "base_seed,problem_checksum\n";
    for (const CampaignResult& c : campaigns) {
        out << c.config.id << ',' << c.config.problem.name << ','
            << policy_name(c.config.ga.mutation_policy) << ','
            << format_number(policy_rate(c.config.ga.mutation_policy)) << ','
            << c.config.ga.population_size << ',' << c.config.trials << ','
            << format_number(c.stats.avg_generations) << ','
            << format_number(c.stats.avg_lowest_cost) << ',' << c.stats.optimum_count << ','
            << c.stats.max_generations << ',' << format_number(c.stats.optimum_pct) << ','
            << format_number(c.config.base_seed) << ','
            << format_number(c.config.problem.checksum) << '\n';
    }
}

void write_trials_csv(std::ostream& out, const CampaignResult& campaign) {
    out << "trial,seed,generations,lowest_cost,optimum_hit,capped\n";
    for (std::size_t i = 0; i < campaign.trials.size(); ++i) {
        const TrialResult& t = campaign.trials[i];
        out << i << ',' << format_number(trial_seed(campaign.config.base_seed, static_cast<int>(i)))
            << ',' << t.generations_evolved << ',' << format_number(t.lowest_cost) << ','
            << (t.optimum_hit ? 1 : 0) << ',' << (t.capped ? 1 : 0) << '\n';
    }
}

std::filesystem::path write_results_csv(std::span<const CampaignResult> campaigns,
                                        const std::string& stem,
                                        const std::filesystem::path& out_dir) {
    const std::filesystem::path summary_path = out_dir / (stem + "_summary.csv");
    {
        auto out = open_for_write(summary_path);
        write_summary_csv(out, campaigns);
        if (!out) throw std::runtime_error("failed writing " + summary_path.string());
    }
    for (const CampaignResult& c : campaigns) {
        const std::filesystem::path trials_path = out_dir / (c.config.id + "_trials.csv");
        auto out = open_for_write(trials_path);
        write_trials_csv(out, c);
        if (!out) throw std::runtime_error("failed writing " + trials_path.string());
    }
    return summary_path;
}

int median_cost_trial(std::span<const TrialResult> trials) {
    if (trials.empty()) throw std::invalid_argument("median_cost_trial: no trials");
    std::vector<int> order(trials.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ta = trials[static_cast<std::size_t>(a)];
        const auto& tb = trials[static_cast<std::size_t>(b)];
        if (ta.lowest_cost != tb.lowest_cost) return ta.lowest_cost < tb.lowest_cost;
        return a < b;
    });
    return order[order.size() / 2];
}

void emit_plots(const TrialResult& trial, const std::filesystem::path& path_prefix) {
    if (trial.trace.empty()) throw std::invalid_argument("emit_plots: trial has an empty trace");

    std::vector<double> generations;
    std::vector<double> best_costs;
    std::vector<double> skews;
    generations.reserve(trial.trace.size());
    for (const GenerationRecord& r : trial.trace) {
        generations.push_back(r.generation);
        best_costs.push_back(r.best_cost);
        skews.push_back(r.fitness_skewness.value);
    }

    const std::filesystem::path cost_csv = path_prefix.string() + "_cost.csv";
    {
        auto out = open_for_write(cost_csv);
        out << "generation,best_cost\n";
        for (const GenerationRecord& r : trial.trace)
            out << r.generation << ',' << format_number(r.best_cost) << '\n';
    }
    const std::filesystem::path skew_csv = path_prefix.string() + "_skew.csv";
    {
        auto out = open_for_write(skew_csv);
        out << "generation,fitness_skewness,degenerate\n";
        for (const GenerationRecord& r : trial.trace)
            out << r.generation << ',' << format_number(r.fitness_skewness.value) << ','
                << (r.fitness_skewness.degenerate ? 1 : 0) << '\n';
    }

    write_line_svg(path_prefix.string() + "_cost.svg", "Lowest cost by generation", "generation",
                   "best cost", generations, best_costs);
    write_line_svg(path_prefix.string() + "_skew.svg", "Fitness skewness by generation",
                   "generation", "skewness", generations, skews);
}

}  // namespace aga
