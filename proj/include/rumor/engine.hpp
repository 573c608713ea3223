#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rumor/graph.hpp"
#include "rumor/lists.hpp"

namespace rumor {

enum class Model { fully_random, quasirandom_rolling, quasirandom_literal };

std::string to_string(Model m);
Model model_from_string(const std::string& s);

/// Thrown when a run breaks a bound that holds with probability 1; it
/// indicates an engine bug, not bad luck.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Model model = Model::quasirandom_rolling;
    int start_vertex = 0;
    std::uint64_t seed = 0;
    int max_rounds = 0;            // >= 1
    double loss_probability = 0.0; // each call dropped independently; default off
    bool record_trace = false;
};

// max_rounds defaults used by the harness and CLI.
int default_bench_rounds(int n);        // 40 * ceil(log2 n)
int default_adversarial_rounds(int n);  // 4n

struct TraceEvent {
    int round;
    int caller;
    int callee;
    bool newly_informed;
};

struct Trace {
    static constexpr int kNever = std::numeric_limits<int>::max();

    std::vector<TraceEvent> events;  // populated only when record_trace
    std::vector<int> informed_at;    // first-informed round; start has 0
    std::vector<int> informed_counts;  // |I_t| for t = 0..rounds_run
    int broadcast_time = kNever;
    int rounds_run = 0;
};

// Round-synchronous push: in round t every vertex informed by the end of
// round t-1 makes exactly one call; a vertex informed in round t first
// calls in round t+1. Halts when everyone is informed or max_rounds is
// reached (broadcast_time stays at the never sentinel in that case).
//
// fully_random      — every call picks an independent uniform neighbor.
// quasirandom_rolling — positions are drawn up front (here or via `fixed`)
//                     and the schedule advances every round from round 1:
//                     vertex v's round-t callee is order[v] at position
//                     (offset[v] + t - 1) mod deg(v).
// quasirandom_literal — v draws a uniform list position when it becomes
//                     informed (or takes it from `fixed`) and then follows
//                     its list.
Trace simulate(const Graph& g, const ListAssignment& lists, const RunConfig& cfg);
Trace simulate(const Graph& g, const ListAssignment& lists, const RunConfig& cfg,
               const Offsets& fixed);

// The set of vertices that can relay to w through a chain of scheduled
// calls at strictly increasing rounds inside [a, b], under the rolling
// schedule (lists, offsets). w itself is excluded. Sorted ascending.
std::vector<int> reach_set(const Graph& g, const ListAssignment& lists, const Offsets& offsets,
                           int w, int a, int b);

// Earliest round e such that v relays to w with all chain calls in [a, e],
// for every v (kNever when no chain fits in [a, horizon]). reach_set is a
// filter of this; exposed so callers can sweep windows [a, t] cheaply.
std::vector<int> reach_completion_times(const Graph& g, const ListAssignment& lists,
                                        const Offsets& offsets, int w, int a, int horizon);

/// Path schedule that forces the slowest possible broadcast: every internal
/// vertex calls its already-informed predecessor first, giving exactly
/// 2n-3 rounds from the endpoint.
struct PathSchedule {
    Graph graph;
    ListAssignment lists;
    Offsets offsets;
    int start;
};
PathSchedule adversarial_path_schedule(int n);

/// Two-clique-plus-hub schedule: the hub's list serves all of clique 1
/// before any of clique 2, so a rumor started inside clique 1 crosses only
/// after the hub walks the rest of its clique-1 block. Offsets stay random
/// per run.
struct TwoCliqueSchedule {
    Graph graph;
    ListAssignment lists;
    int start;
};
TwoCliqueSchedule adversarial_two_clique_schedule(int n);

/// Empirical first-callee distribution of vertex v under the two
/// quasirandom semantics, in list order.
struct FirstCallTable {
    std::vector<int> neighbor;
    std::vector<double> rolling_freq;
    std::vector<double> literal_freq;
    int samples = 0;
};
FirstCallTable first_call_distribution(const Graph& g, const ListAssignment& lists, int v,
                                       int sample_count, std::uint64_t seed);

// JSON-lines trace export: a header object {model, seed, n, start}
// followed by one event object per line.
void write_trace_jsonl(const Trace& trace, const RunConfig& cfg, int n, std::ostream& out);

}  // namespace rumor
