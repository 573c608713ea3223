#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rumor/graph.hpp"

namespace rumor {

/// Pass bars for the finite-size expansion audits. The audited properties
/// are asymptotic statements about constants; these defaults pin concrete
/// bars and every one of them can be overridden.
struct ExpansionParams {
    double c_alpha = 2.0;            // subset-size cap multiplier: |S| <= c_alpha * n / d
    double c_beta_threshold = 0.05;  // vertex-expansion pass bar
    double c_delta = 1.0 / 6.0;      // required neighbor fraction in edge expansion
    double c_omega = 32.0;           // allowed deficient-vertex budget multiplier
    double p3_max_ratio = 5.0;       // max-degree cap: max_deg <= ratio * avg_deg
    double p3_min_ratio = 0.5;       // min-degree floor when avg_deg > ln n
};

enum class AuditMode { exact, sampled };

struct P1Report {
    double min_observed_ratio = 0.0;  // min |boundary(S)| / (avg_deg * |S|)
    std::vector<int> witness;         // subset achieving the minimum, sorted
    std::string witness_source;       // enumerated | grown | ball | cut | level_set
    AuditMode mode = AuditMode::sampled;
    // Ratio of the Hamming-level witness; only set on hypercubes.
    std::optional<double> level_set_ratio;
    bool pass = false;
};

struct P2Report {
    double max_deficient_excess = 0.0;  // deficient count minus allowed budget, worst subset
    std::vector<int> witness;
    bool pass = false;
};

struct P3Report {
    int min_degree = 0;
    double avg_degree = 0.0;
    int max_degree = 0;
    double delta_ratio = 0.0;  // min_deg / avg_deg
    double max_ratio = 0.0;    // max_deg / avg_deg
    bool degree_cap_ok = false;
    bool min_degree_ok = false;  // vacuous when avg_deg <= ln n
    bool pass = false;
};

struct ExpansionReport {
    P1Report p1;
    P2Report p2;
    P3Report p3;
};

// Size window for audited subsets: [3, max(3, floor(c_alpha * n / d))],
// clamped to proper subsets. Throws when no proper subset of size >= 3
// exists (n <= 3).
std::pair<int, int> p1_size_window(const Graph& g, const ExpansionParams& params);

// Vertex expansion. exact mode enumerates every connected subset in the
// size window (n <= 20); sampled mode combines seeded random connected
// subsets with deterministic witnesses: BFS balls around every vertex,
// cut components (graphs small enough to afford n extra BFS sweeps), and
// the Hamming-level set on hypercubes.
P1Report audit_p1(const Graph& g, const ExpansionParams& params, AuditMode mode,
                  int sample_count, std::uint64_t seed = 0);

// Edge expansion over seeded uniform subsets with sizes on a geometric
// grid from 3 to n-1 (subset_samples draws per size).
P2Report audit_p2(const Graph& g, const ExpansionParams& params, int subset_samples,
                  std::uint64_t seed = 0);

// Degree regularity.
P3Report audit_p3(const Graph& g, const ExpansionParams& params);

ExpansionReport audit_all(const Graph& g, const ExpansionParams& params, AuditMode p1_mode,
                          int p1_samples, int p2_samples, std::uint64_t seed = 0);

// |Γ(S) \ S| for a duplicate-free vertex set.
int boundary_size(const Graph& g, const std::vector<int>& subset);

// |Γ(S)|: vertices adjacent to S (members of S included when they have a
// neighbor inside).
int neighborhood_size(const Graph& g, const std::vector<int>& subset);

std::string to_json(const ExpansionReport& report);

}  // namespace rumor
