#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rumor/graph.hpp"

namespace rumor {

inline constexpr int kDenseEigenLimit = 4096;

struct SpectralReport {
    double lambda1 = 0.0;  // largest adjacency eigenvalue
    double lambda = 0.0;   // max(|second largest|, |smallest|)
    bool is_regular = false;
    std::optional<bool> ramanujan_pass;  // lambda <= 2*sqrt(d-1); regular graphs only
    double strong_expander_constant = 0.0;  // lambda / sqrt(avg degree)
    bool approximate = false;  // iterative path (n > dense limit)
    double residual_lambda1 = 0.0;  // ||A v - lambda v|| for the reported pairs
    double residual_lambda = 0.0;
    std::vector<double> eigenvalues;  // full spectrum, ascending; dense path only
};

// Full symmetric eigendecomposition up to kDenseEigenLimit vertices;
// beyond that, extremal eigenvalues by deflated power iteration, flagged
// approximate.
SpectralReport spectral(const Graph& g);

struct MixingReport {
    double max_violation = 0.0;  // worst ||E(A,B)| - d|A||B|/n| - lambda*sqrt(|A||B|)
    int pairs = 0;
};

// Checks the edge-count deviation bound on seeded random subset pairs of a
// regular graph; |E(A,B)| counts ordered adjacent pairs. The bound is a
// theorem, so max_violation should never exceed numerical slack.
MixingReport mixing_check(const Graph& g, double lambda, int pair_samples, std::uint64_t seed);

struct TannerReport {
    double max_violation = 0.0;  // worst (guaranteed |Γ(S)| lower bound) - |Γ(S)|
    int samples = 0;
};

// Checks the neighborhood-size lower bound d^2|S| / (lambda^2 +
// (d^2 - lambda^2)|S|/n) on seeded random subsets of a regular graph.
TannerReport tanner_check(const Graph& g, double lambda, int subset_samples, std::uint64_t seed);

std::string to_json(const SpectralReport& report);

}  // namespace rumor
