#pragma once

#include <string>
#include <vector>

namespace rumor {

/// Broadcast-time distribution summary over seeded trials. Timed-out
/// trials are excluded from the moments and quantiles but counted.
struct TrialStats {
    std::string model;
    int count = 0;  // trials run, timeouts included
    double mean = 0.0;
    double stddev = 0.0;
    int min = 0;
    int max = 0;
    int p50 = 0;
    int p90 = 0;
    int p99 = 0;
    int timeout_count = 0;
    std::vector<double> informed_curve;  // mean |I_t| over trials, t = 0..
    std::vector<double> success_prob;    // fraction of trials finished by round t
};

// times uses Trace::kNever for timeouts; counts[i] is trial i's per-round
// informed counts (each plateaus at its final value).
TrialStats summarize(const std::string& model, const std::vector<int>& times,
                     const std::vector<std::vector<int>>& counts, int n);

// Nearest-rank quantile of a sorted sample.
int quantile_nearest_rank(const std::vector<int>& sorted, double q);

// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-square statistic.
double chi_square_pvalue(double stat, int dof);

// Goodness-of-fit statistic of observed counts against uniform.
double chi_square_uniform_stat(const std::vector<int>& counts);

}  // namespace rumor
