// Command-line front end for the adaptive-mutation GA benchmark harness.
//
// Subcommands:
//   run    one campaign (problem x policy x population size)
//   suite  the full policy/population grid for one problem
//   plot   re-render an SVG from a previously written trace CSV
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "aga/experiment.hpp"
#include "aga/format.hpp"
#include "aga/plot.hpp"

namespace fs = std::filesystem;
using namespace aga;

namespace {

struct CommonOpts {
    std::string problem;
    int trials = 200;
    std::uint64_t seed = 2026;
    std::string out_dir;
    int workers = 0;  // 0 = all hardware threads
    double crossover = 0.8;
    int window = 50;
    int max_generations = 10000;
    int elitism = 2;
    int tournament = 2;
    bool tsplib_rounding = false;
    std::optional<double> optimum;
    std::optional<double> optimum_tol;
};

std::string default_out_dir() {
    if (const char* env = std::getenv("AGA_OUT_DIR")) return env;
    return "out";
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

Problem resolve_problem(const CommonOpts& opts) {
    if (opts.problem == "f1" || opts.problem == "f7") {
        Problem p = opts.problem == "f1" ? make_f1() : make_f7();
        if (opts.optimum) p.optimum.cost = *opts.optimum;
        if (opts.optimum_tol) p.optimum.absolute_tolerance = *opts.optimum_tol;
        return p;
    }
    if (opts.problem.rfind("tsp:", 0) == 0) {
        const fs::path path = opts.problem.substr(4);
        const TspInstance instance = load_tsplib(path);
        const TspMetric metric =
            opts.tsplib_rounding ? TspMetric::rounded_euclidean : TspMetric::euclidean;
        OptimumTarget target{std::numeric_limits<double>::infinity(), 0.0, 0.0};
        if (opts.optimum) {
            target = tsp_target(*opts.optimum);
        } else if (instance_checksum(instance) == wi29_checksum()) {
            target = tsp_target(opts.tsplib_rounding ? 27603.0 : wi29_optimal_cost);
        }
        if (opts.optimum_tol) target.relative_tolerance = *opts.optimum_tol;
        return make_tsp(instance, target, metric);
    }
    throw CLI::ValidationError("--problem", "expected f1, f7 or tsp:<path>");
}

MutationPolicy resolve_policy(const std::string& name, double p, double p_max) {
    if (name == "sga" || name == "constant") return ConstantMutation{p};
    if (name == "fitness") return FitnessAdaptiveMutation{p_max};
    if (name == "rank") return RankAdaptiveMutation{p_max};
    throw CLI::ValidationError("--policy", "expected sga, fitness or rank");
}

GaConfig make_ga_config(const CommonOpts& opts, const MutationPolicy& policy, int pop) {
    GaConfig ga;
    ga.population_size = pop;
    ga.crossover_probability = opts.crossover;
    ga.mutation_policy = policy;
    ga.tournament_size = opts.tournament;
    ga.convergence_window = opts.window;
    ga.max_generations = opts.max_generations;
    ga.elite_count = opts.elitism;
    return ga;
}

std::string campaign_id(const Problem& problem, const MutationPolicy& policy, int pop) {
    return problem.name + "_" + policy_name(policy) + "_pop" + std::to_string(pop);
}

void print_summary_table(std::span<const CampaignResult> campaigns) {
    std::cout << std::left << std::setw(24) << "campaign" << std::right << std::setw(10) << "pop"
              << std::setw(10) << "trials" << std::setw(14) << "avg gens" << std::setw(16)
              << "avg lowest" << std::setw(8) << "hits" << std::setw(10) << "max gens"
              << std::setw(9) << "pct" << '\n';
    for (const CampaignResult& c : campaigns) {
        std::cout << std::left << std::setw(24) << c.config.id << std::right << std::setw(10)
                  << c.config.ga.population_size << std::setw(10) << c.config.trials
                  << std::setw(14) << std::fixed << std::setprecision(2)
                  << c.stats.avg_generations << std::setw(16) << std::setprecision(6)
                  << c.stats.avg_lowest_cost << std::setw(8) << c.stats.optimum_count
                  << std::setw(10) << c.stats.max_generations << std::setw(8)
                  << std::setprecision(1) << c.stats.optimum_pct << "%" << '\n';
        std::cout.unsetf(std::ios::fixed);
        std::cout << std::setprecision(6);
    }
}

int emit_campaign_plots(const CampaignResult& campaign, const fs::path& out_dir,
                        std::optional<int> plot_trial) {
    const int index = plot_trial ? *plot_trial : median_cost_trial(campaign.trials);
    if (index < 0 || index >= static_cast<int>(campaign.trials.size()))
        throw std::runtime_error("plot trial index out of range: " + std::to_string(index));
    const fs::path prefix = out_dir / (campaign.config.id + "_trial" + std::to_string(index));
    emit_plots(campaign.trials[static_cast<std::size_t>(index)], prefix);
    return index;
}

// Fully resolved invocation, re-runnable via `aga --config <out>/runspec.toml`.
void write_runspec(const std::string& section, const CommonOpts& opts, const Problem& problem,
                   const std::string& policy, double p, double p_max, std::span<const int> pops,
                   std::optional<int> plot_trial, int workers, const fs::path& out_dir) {
    const fs::path path = out_dir / "runspec.toml";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "# resolved run specification; reproduce with: aga --config runspec.toml\n";
    out << "[" << section << "]\n";
    out << "problem=\"" << opts.problem << "\"\n";
    if (!policy.empty()) out << "policy=\"" << policy << "\"\n";
    out << "p=" << format_number(p) << "\n";
    out << "pmax=" << format_number(p_max) << "\n";
    if (pops.size() == 1) {
        out << "pop=" << pops[0] << "\n";
    } else {
        out << "pop=[";
        for (std::size_t i = 0; i < pops.size(); ++i) out << (i ? "," : "") << pops[i];
        out << "]\n";
    }
    out << "trials=" << opts.trials << "\n";
    out << "seed=" << format_number(opts.seed) << "\n";
    out << "out=\"" << opts.out_dir << "\"\n";
    out << "workers=" << workers << "\n";
    out << "crossover=" << format_number(opts.crossover) << "\n";
    out << "window=" << opts.window << "\n";
    out << "max-gens=" << opts.max_generations << "\n";
    out << "elitism=" << opts.elitism << "\n";
    out << "tournament=" << opts.tournament << "\n";
    out << "tsplib-rounding=" << (opts.tsplib_rounding ? "true" : "false") << "\n";
    out << "optimum=" << format_number(problem.optimum.cost) << "\n";
    out << "optimum-tol="
        << format_number(problem.kind == GenomeKind::keys ? problem.optimum.relative_tolerance
                                                          : problem.optimum.absolute_tolerance)
        << "\n";
    if (plot_trial) out << "plot-trial=" << *plot_trial << "\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

ProgressSink progress_printer(const std::string& id) {
    return [id](int done, int total) {
        if (done == total || done % 50 == 0)
            std::cerr << "  " << id << ": " << done << "/" << total << " trials\r"
                      << (done == total ? "\n" : "");
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genetic-algorithm benchmark harness comparing constant, fitness-adaptive "
                 "and rank-adaptive mutation policies"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML config file");

    CommonOpts opts;
    opts.out_dir = default_out_dir();

    auto add_common = [&opts](CLI::App* cmd, bool need_problem) {
        auto* p = cmd->add_option("--problem", opts.problem, "Problem: f1, f7 or tsp:<path>");
        if (need_problem) p->required();
        cmd->add_option("--trials", opts.trials, "Trials per campaign")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opts.seed, "Base seed; trial i derives from (seed, i)");
        cmd->add_option("--out", opts.out_dir, "Output directory (default $AGA_OUT_DIR or ./out)");
        cmd->add_option("--workers", opts.workers, "Worker threads for trials (0 = all cores)");
        cmd->add_option("--crossover", opts.crossover, "Crossover probability")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--window", opts.window, "Convergence window in generations")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-gens", opts.max_generations, "Generation safety cap")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--elitism", opts.elitism, "Best parents copied each generation")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--tournament", opts.tournament, "Tournament size")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--tsplib-rounding", opts.tsplib_rounding,
                      "Use the TSPLIB nearest-integer edge metric");
        cmd->add_option("--optimum", opts.optimum, "Override the optimum target cost");
        cmd->add_option("--optimum-tol", opts.optimum_tol,
                        "Override the optimum tolerance (absolute for f1/f7, relative for TSP)");
    };

    // run
    auto* run_cmd = app.add_subcommand("run", "Run one campaign and write CSV + plots");
    run_cmd->configurable();
    std::string policy_name_arg;
    double policy_p = 0.05;
    double policy_pmax = 0.1;
    int run_pop = 10;
    std::optional<int> plot_trial;
    add_common(run_cmd, true);
    run_cmd->add_option("--policy", policy_name_arg, "Mutation policy: sga, fitness or rank")
        ->required();
    run_cmd->add_option("--p", policy_p, "Constant per-chromosome mutation probability (sga)")
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--pmax", policy_pmax, "Maximum mutation probability (adaptive policies)")
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--pop", run_pop, "Population size")->check(CLI::Range(2, 1000000));
    run_cmd->add_option("--plot-trial", plot_trial,
                        "Trial index to plot (default: the median-cost trial)");

    // suite
    auto* suite_cmd =
        app.add_subcommand("suite", "Run the full policy/population grid for one problem");
    suite_cmd->configurable();
    std::vector<int> suite_pops;
    add_common(suite_cmd, true);
    suite_cmd->add_option("--pop", suite_pops,
                          "Population sizes (default: 10 and 20; 250 and 500 for tsp)");
    suite_cmd->add_option("--p", policy_p, "Constant per-chromosome mutation probability (sga)")
        ->check(CLI::Range(0.0, 1.0));
    suite_cmd->add_option("--pmax", policy_pmax, "Maximum mutation probability (adaptive policies)")
        ->check(CLI::Range(0.0, 1.0));

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "Re-render an SVG from a trace CSV");
    std::string trace_path;
    std::string plot_out;
    plot_cmd->add_option("--trace", trace_path, "Trace CSV (generation,value rows)")->required();
    plot_cmd->add_option("--out", plot_out, "Output SVG path (default: trace path with .svg)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (plot_cmd->parsed()) {
            std::ifstream in(trace_path);
            if (!in) throw std::runtime_error("cannot open trace file " + trace_path);
            std::string header;
            std::getline(in, header);
            std::vector<double> xs, ys;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const auto comma = line.find(',');
                if (comma == std::string::npos)
                    throw std::runtime_error("malformed trace line: " + line);
                xs.push_back(std::strtod(line.c_str(), nullptr));
                ys.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
            }
            const std::string y_label =
                header.find("skew") != std::string::npos ? "skewness" : "best cost";
            const fs::path svg = plot_out.empty()
                                     ? fs::path(trace_path).replace_extension(".svg")
                                     : fs::path(plot_out);
            write_line_svg(svg, fs::path(trace_path).stem().string(), "generation", y_label, xs,
                           ys);
            std::cout << "wrote " << svg.string() << '\n';
            return 0;
        }

        fs::create_directories(opts.out_dir);
        const int workers = resolve_workers(opts.workers);
        const Problem problem = resolve_problem(opts);

        if (run_cmd->parsed()) {
            const MutationPolicy policy = resolve_policy(policy_name_arg, policy_p, policy_pmax);
            CampaignConfig cfg;
            cfg.problem = problem;
            cfg.ga = make_ga_config(opts, policy, run_pop);
            cfg.id = campaign_id(problem, policy, run_pop);
            cfg.trials = opts.trials;
            cfg.base_seed = opts.seed;
            cfg.workers = workers;
            const CampaignResult result = run_campaign(cfg, progress_printer(cfg.id));
            const CampaignResult campaigns[] = {result};
            write_results_csv(campaigns, cfg.id, opts.out_dir);
            const int plotted = emit_campaign_plots(result, opts.out_dir, plot_trial);
            const int pops[] = {run_pop};
            write_runspec("run", opts, problem, policy_name_arg, policy_p, policy_pmax, pops,
                          plotted, workers, opts.out_dir);
            print_summary_table(campaigns);
            return 0;
        }

        // suite: three policies per population size, paper parameters
        if (suite_pops.empty())
            suite_pops = problem.kind == GenomeKind::keys ? std::vector<int>{250, 500}
                                                          : std::vector<int>{10, 20};
        const MutationPolicy policies[] = {MutationPolicy{ConstantMutation{policy_p}},
                                           MutationPolicy{FitnessAdaptiveMutation{policy_pmax}},
                                           MutationPolicy{RankAdaptiveMutation{policy_pmax}}};
        for (int pop : suite_pops) {
            std::vector<CampaignResult> campaigns;
            for (const MutationPolicy& policy : policies) {
                CampaignConfig cfg;
                cfg.problem = problem;
                cfg.ga = make_ga_config(opts, policy, pop);
                cfg.id = campaign_id(problem, policy, pop);
                cfg.trials = opts.trials;
                cfg.base_seed = opts.seed;
                cfg.workers = workers;
                campaigns.push_back(run_campaign(cfg, progress_printer(cfg.id)));
            }
            write_results_csv(campaigns, problem.name + "_pop" + std::to_string(pop),
                              opts.out_dir);
            for (const CampaignResult& campaign : campaigns)
                emit_campaign_plots(campaign, opts.out_dir, {});
            print_summary_table(campaigns);
        }
        write_runspec("suite", opts, problem, "", policy_p, policy_pmax, suite_pops, {}, workers,
                      opts.out_dir);
        return 0;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
}
