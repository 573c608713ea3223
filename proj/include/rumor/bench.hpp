#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rumor/engine.hpp"
#include "rumor/generators.hpp"
#include "rumor/lists.hpp"
#include "rumor/stats.hpp"

namespace rumor {

/// One multi-trial experiment: a graph source, one or more protocol
/// models, and a base seed from which every per-trial seed derives.
struct ExperimentConfig {
    GraphSpec graph_spec;
    std::vector<Model> models;
    int trials = 1;
    std::optional<int> fixed_start;  // nullopt: uniform random start per trial
    ListStrategy list_strategy = ListStrategy::natural;
    std::uint64_t base_seed = 0;
    int max_rounds = 0;  // 0: 40 * ceil(log2 n)
    bool resample_random_graphs = true;  // fresh sample per trial for random families
    double loss_probability = 0.0;
    int regen_attempts = 100;  // disconnected-sample retries per trial
};

struct ComparisonReport {
    int n = 0;
    std::vector<TrialStats> models;
    // mean(fully_random) / mean(quasirandom); 0 when either is absent.
    double speedup = 0.0;
    // success_prob(quasirandom) - success_prob(fully_random) per round.
    std::vector<double> dominance;
};

// Runs trials (possibly across threads, capped by RUMORBENCH_THREADS) and
// folds them in trial order, so the report is bit-reproducible for equal
// configs. Every lossless quasirandom trial is checked against the
// deterministic bounds (max_degree * ecc(start) and 2n-3); a violation
// throws InvariantViolation.
ComparisonReport run_experiment(const ExperimentConfig& cfg);

struct SweepRow {
    int n = 0;
    std::string model;
    double mean = 0.0;
    double p99 = 0.0;
    double mean_over_log = 0.0;  // mean / ln n
};

struct SweepReport {
    std::vector<SweepRow> rows;
    // Per-model growth verdict: last mean_over_log divided by the first.
    std::vector<std::pair<std::string, double>> normalized_drift;
};

// Runs the experiment across sizes. `sizes` are vertex counts, except for
// kary_tree where they are depths (arity fixed by the spec) and hypercube
// where they must be powers of two. A gnp spec with p == 0 tracks the
// sparse regime p = (ln n + 2 ln ln n) / n at every size.
SweepReport scaling_sweep(const GraphSpec& base, const std::vector<int>& sizes,
                          const std::vector<Model>& models, int trials, std::uint64_t base_seed);

struct TailReport {
    TrialStats fully_random;
    TrialStats quasirandom;
    bool fully_random_tail_dominates = false;  // fr p99 > qr p99
};

// Upper-quantile comparison on sparse gnp (connected samples only, fresh
// sample per trial).
TailReport tail_compare(const GraphSpec& gnp_spec, int trials, std::uint64_t base_seed);

double sparse_gnp_probability(int n);  // (ln n + 2 ln ln n) / n

// Thread cap: RUMORBENCH_THREADS, defaulting to the machine parallelism.
int trial_thread_count(int trials);

// Exporters. config_echo is the effective-configuration line every output
// artifact embeds.
std::string comparison_to_csv(const ComparisonReport& report, const std::string& config_echo);
std::string comparison_to_json(const ComparisonReport& report, const std::string& config_echo);
std::string curves_to_csv(const ComparisonReport& report, const std::string& config_echo);
std::string sweep_to_csv(const SweepReport& report, const std::string& config_echo);
std::string sweep_to_json(const SweepReport& report, const std::string& config_echo);

}  // namespace rumor
