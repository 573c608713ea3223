#include "rumor/engine.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rumor/generators.hpp"
#include "rumor/rng.hpp"

namespace rumor {

std::string to_string(Model m) {
    switch (m) {
        case Model::fully_random: return "fully_random";
        case Model::quasirandom_rolling: return "quasirandom";
        case Model::quasirandom_literal: return "quasirandom_literal";
    }
    return "?";
}

Model model_from_string(const std::string& s) {
    if (s == "fully_random") return Model::fully_random;
    if (s == "quasirandom" || s == "quasirandom_rolling") return Model::quasirandom_rolling;
    if (s == "quasirandom_literal") return Model::quasirandom_literal;
    throw std::invalid_argument("unknown model: " + s);
}

int default_bench_rounds(int n) {
    int bits = 1;
    while ((1 << bits) < n) ++bits;
    return 40 * std::max(1, bits);
}

int default_adversarial_rounds(int n) { return 4 * n; }

namespace {

void check_config(const Graph& g, const RunConfig& cfg) {
    if (cfg.max_rounds < 1) throw std::invalid_argument("simulate: max_rounds must be >= 1");
    if (cfg.start_vertex < 0 || cfg.start_vertex >= g.n())
        throw std::invalid_argument("simulate: start vertex out of range");
    if (!(cfg.loss_probability >= 0.0 && cfg.loss_probability < 1.0))
        throw std::invalid_argument("simulate: loss probability must be in [0, 1)");
}

Trace run(const Graph& g, const ListAssignment& lists, const RunConfig& cfg, const Offsets* fixed) {
    check_config(g, cfg);
    const int n = g.n();
    const bool quasirandom = cfg.model != Model::fully_random;
    if (quasirandom && static_cast<int>(lists.order.size()) != n)
        throw std::invalid_argument("simulate: list assignment does not cover the graph");

    Offsets drawn;
    const Offsets* offsets = nullptr;
    if (cfg.model == Model::quasirandom_rolling) {
        if (fixed == nullptr) {
            drawn = draw_offsets(g, derive(cfg.seed, streams::offsets));
            offsets = &drawn;
        } else {
            offsets = fixed;
        }
    } else if (cfg.model == Model::quasirandom_literal && fixed != nullptr) {
        offsets = fixed;  // injected first-call positions (used by coupling checks)
    }

    // Per-vertex call streams; independent of iteration order by derivation.
    std::vector<std::uint64_t> rng_state;
    if (cfg.model == Model::fully_random || (cfg.model == Model::quasirandom_literal && offsets == nullptr)) {
        rng_state.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) rng_state[v] = derive(cfg.seed, streams::calls, static_cast<std::uint64_t>(v));
    }
    std::vector<std::uint64_t> loss_state;
    if (cfg.loss_probability > 0.0) {
        loss_state.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) loss_state[v] = derive(cfg.seed, streams::loss, static_cast<std::uint64_t>(v));
    }

    Trace trace;
    trace.informed_at.assign(static_cast<std::size_t>(n), Trace::kNever);
    trace.informed_at[cfg.start_vertex] = 0;
    trace.informed_counts.push_back(1);

    std::vector<int> informed_order;
    informed_order.reserve(static_cast<std::size_t>(n));
    informed_order.push_back(cfg.start_vertex);

    // Current list position per vertex; -1 until the vertex makes its first
    // call, at which point the rolling schedule fixes it from the round.
    std::vector<int> cursor(static_cast<std::size_t>(n), -1);

    int informed = 1;
    for (int t = 1; t <= cfg.max_rounds && informed < n; ++t) {
        const std::size_t active = informed_order.size();  // informed by end of t-1
        for (std::size_t i = 0; i < active; ++i) {
            const int v = informed_order[i];
            const int deg = g.degree(v);
            if (deg == 0) continue;

            int callee;
            switch (cfg.model) {
                case Model::fully_random: {
                    SplitMix64 rng(rng_state[v]);
                    callee = g.neighbors(v)[rng.below_int(deg)];
                    rng_state[v] = derive(rng_state[v], 1);
                    break;
                }
                case Model::quasirandom_rolling: {
                    if (cursor[v] < 0) cursor[v] = static_cast<int>((offsets->index[v] + t - 1) % deg);
                    callee = lists.order[v][cursor[v]];
                    cursor[v] = cursor[v] + 1 == deg ? 0 : cursor[v] + 1;
                    break;
                }
                case Model::quasirandom_literal: {
                    if (cursor[v] < 0) {
                        if (offsets != nullptr) {
                            cursor[v] = offsets->index[v];
                        } else {
                            SplitMix64 rng(rng_state[v]);
                            cursor[v] = rng.below_int(deg);
                            rng_state[v] = derive(rng_state[v], 1);
                        }
                    }
                    callee = lists.order[v][cursor[v]];
                    cursor[v] = cursor[v] + 1 == deg ? 0 : cursor[v] + 1;
                    break;
                }
                default: throw std::logic_error("bad model");
            }

            if (cfg.loss_probability > 0.0) {
                SplitMix64 rng(loss_state[v]);
                const bool lost = rng.u01() < cfg.loss_probability;
                loss_state[v] = derive(loss_state[v], 1);
                if (lost) continue;
            }

            bool fresh = false;
            if (trace.informed_at[callee] == Trace::kNever) {
                trace.informed_at[callee] = t;
                informed_order.push_back(callee);
                ++informed;
                fresh = true;
            }
            if (cfg.record_trace) trace.events.push_back({t, v, callee, fresh});
        }
        trace.informed_counts.push_back(informed);
        trace.rounds_run = t;
        if (informed == n) trace.broadcast_time = t;
    }
    if (n == 1) trace.broadcast_time = 0;

    // Universal bound: a lossless quasirandom broadcast never needs more
    // than 2n-3 rounds.
    if (quasirandom && cfg.loss_probability == 0.0 && n >= 2 && trace.broadcast_time != Trace::kNever &&
        trace.broadcast_time > 2 * n - 3) {
        throw InvariantViolation("quasirandom broadcast exceeded 2n-3 rounds");
    }
    return trace;
}

}  // namespace

Trace simulate(const Graph& g, const ListAssignment& lists, const RunConfig& cfg) {
    return run(g, lists, cfg, nullptr);
}

Trace simulate(const Graph& g, const ListAssignment& lists, const RunConfig& cfg, const Offsets& fixed) {
    if (static_cast<int>(fixed.index.size()) != g.n())
        throw std::invalid_argument("simulate: offsets do not cover the graph");
    return run(g, lists, cfg, &fixed);
}

std::vector<int> reach_completion_times(const Graph& g, const ListAssignment& lists,
                                        const Offsets& offsets, int w, int a, int horizon) {
    const int n = g.n();
    if (w < 0 || w >= n) throw std::invalid_argument("reach: vertex out of range");
    if (a < 1 || horizon < a) throw std::invalid_argument("reach: need 1 <= a <= b");

    // earliest[v] after processing round t holds: the smallest e <= horizon
    // such that a chain from v with first call at round >= t ends at w by
    // round e. Sweep t from the horizon down to a; a chain v -> x at round
    // t continues from x with first call >= t+1.
    std::vector<int> earliest(static_cast<std::size_t>(n), Trace::kNever);
    std::vector<int> prev(static_cast<std::size_t>(n), Trace::kNever);
    for (int t = horizon; t >= a; --t) {
        for (int v = 0; v < n; ++v) {
            if (v == w) continue;
            const int deg = g.degree(v);
            int best = prev[v];
            if (deg > 0) {
                const int pos = static_cast<int>((offsets.index[v] + t - 1) % deg);
                const int x = lists.order[v][pos];
                if (x == w) {
                    best = std::min(best, t);
                } else if (prev[x] != Trace::kNever) {
                    best = std::min(best, prev[x]);
                }
            }
            earliest[v] = best;
        }
        prev = earliest;
    }
    earliest[w] = Trace::kNever;
    return earliest;
}

std::vector<int> reach_set(const Graph& g, const ListAssignment& lists, const Offsets& offsets,
                           int w, int a, int b) {
    auto earliest = reach_completion_times(g, lists, offsets, w, a, b);
    std::vector<int> result;
    for (int v = 0; v < g.n(); ++v)
        if (v != w && earliest[v] <= b) result.push_back(v);
    return result;
}

PathSchedule adversarial_path_schedule(int n) {
    if (n < 2) throw std::invalid_argument("adversarial path: need n >= 2");
    PathSchedule sched;
    sched.graph = make_path(n);
    std::vector<std::vector<int>> order(static_cast<std::size_t>(n));
    order[0] = {1};
    order[n - 1] = {n - 2};
    for (int v = 1; v < n - 1; ++v) order[v] = {v - 1, v + 1};  // predecessor first
    sched.lists = make_explicit_lists(sched.graph, std::move(order));

    // Vertex i is informed at round 2i-1; with offset 1 its rolling position
    // at its first active round 2i lands on the predecessor, wasting one
    // round before passing the rumor on.
    sched.offsets.index.assign(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n - 1; ++v) sched.offsets.index[v] = 1;
    sched.start = 0;
    return sched;
}

TwoCliqueSchedule adversarial_two_clique_schedule(int n) {
    if (n < 8) throw std::invalid_argument("adversarial two-clique: need n >= 8");
    TwoCliqueSchedule sched;
    sched.graph = make_two_clique_hub(n);
    // Ascending ids already place the whole clique-1 block ahead of the
    // clique-2 block on the hub's list; keep every list explicit so the
    // construction does not depend on the natural order.
    std::vector<std::vector<int>> order = sched.graph.adjacency();
    sched.lists = make_explicit_lists(sched.graph, std::move(order));
    sched.start = 0;
    return sched;
}

FirstCallTable first_call_distribution(const Graph& g, const ListAssignment& lists, int v,
                                       int sample_count, std::uint64_t seed) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("first_call_distribution: vertex out of range");
    if (sample_count < 1) throw std::invalid_argument("first_call_distribution: need samples >= 1");
    const int deg = g.degree(v);
    if (deg == 0) throw std::invalid_argument("first_call_distribution: isolated vertex");

    FirstCallTable table;
    table.neighbor = lists.order[v];
    table.samples = sample_count;
    std::vector<int> rolling_count(static_cast<std::size_t>(deg), 0);
    std::vector<int> literal_count(static_cast<std::size_t>(deg), 0);

    SplitMix64 roll(derive(seed, streams::first_call, 0));
    SplitMix64 lit(derive(seed, streams::first_call, 1));
    for (int s = 0; s < sample_count; ++s) {
        // Rolling: position drawn at round 1, schedule advanced to the round
        // the vertex first becomes active (swept deterministically here).
        const int offset = roll.below_int(deg);
        const int informed_round = s % (4 * deg);
        ++rolling_count[(offset + informed_round) % deg];
        ++literal_count[lit.below_int(deg)];
    }
    table.rolling_freq.resize(static_cast<std::size_t>(deg));
    table.literal_freq.resize(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        table.rolling_freq[i] = static_cast<double>(rolling_count[i]) / sample_count;
        table.literal_freq[i] = static_cast<double>(literal_count[i]) / sample_count;
    }
    return table;
}

void write_trace_jsonl(const Trace& trace, const RunConfig& cfg, int n, std::ostream& out) {
    out << "{\"model\":\"" << to_string(cfg.model) << "\",\"seed\":" << cfg.seed << ",\"n\":" << n
        << ",\"start\":" << cfg.start_vertex << "}\n";
    for (const auto& e : trace.events) {
        out << "{\"t\":" << e.round << ",\"caller\":" << e.caller << ",\"callee\":" << e.callee
            << ",\"new\":" << (e.newly_informed ? "true" : "false") << "}\n";
    }
}

}  // namespace rumor
