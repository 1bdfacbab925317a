#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aga/ga.hpp"
#include "aga/problems.hpp"

namespace aga {

struct CampaignConfig {
    std::string id;    // file-name stem for the campaign's CSV and plot outputs
    Problem problem;
    GaConfig ga;       // ga.rng_seed is ignored; trial seeds derive from base_seed
    int trials = 200;
    std::uint64_t base_seed = 1;
    int workers = 1;   // 1 = serial reference path, >1 = OpenMP fan-out over trials
};

struct CampaignStats {
    double avg_generations = 0.0;
    double avg_lowest_cost = 0.0;
    int optimum_count = 0;
    int max_generations = 0;
    double optimum_pct = 0.0;
};

struct CampaignResult {
    CampaignConfig config;
    CampaignStats stats;
    std::vector<TrialResult> trials;  // ordered by trial index
};

// Seed for trial `index` of a campaign; trials are uncorrelated and reproducible.
inline std::uint64_t trial_seed(std::uint64_t base_seed, int index) {
    return mix_seed(base_seed, static_cast<std::uint64_t>(index));
}

using ProgressSink = std::function<void(int completed, int total)>;

// Runs cfg.trials independent seeded trials. Results are ordered by trial index
// and identical for every worker count; aggregation happens after collection.
CampaignResult run_campaign(const CampaignConfig& cfg, const ProgressSink& progress = {});

// Order-insensitive pure fold over trial results.
CampaignStats aggregate_stats(std::span<const TrialResult> trials);

// CSV emission: UTF-8, comma separated, header row, '.' decimal separator.
void write_summary_csv(std::ostream& out, std::span<const CampaignResult> campaigns);
void write_trials_csv(std::ostream& out, const CampaignResult& campaign);

// Writes `<stem>_summary.csv` (one row per campaign) plus a companion
// `<campaign-id>_trials.csv` per campaign; returns the summary path.
std::filesystem::path write_results_csv(std::span<const CampaignResult> campaigns,
                                        const std::string& stem,
                                        const std::filesystem::path& out_dir);

// Trial whose lowest cost is the campaign median (ties go to the lower index).
int median_cost_trial(std::span<const TrialResult> trials);

// Writes <prefix>_cost.{csv,svg} and <prefix>_skew.{csv,svg} for one trial, so
// every plot can be regenerated from its raw trace.
void emit_plots(const TrialResult& trial, const std::filesystem::path& path_prefix);

}  // namespace aga
