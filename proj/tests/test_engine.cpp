#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "rumor/engine.hpp"
#include "rumor/generators.hpp"
#include "rumor/graph.hpp"
#include "rumor/rng.hpp"
#include "rumor/stats.hpp"

using namespace rumor;

namespace {

RunConfig basic_config(Model model, int start, std::uint64_t seed, int max_rounds) {
    RunConfig cfg;
    cfg.model = model;
    cfg.start_vertex = start;
    cfg.seed = seed;
    cfg.max_rounds = max_rounds;
    return cfg;
}

}  // namespace

TEST_CASE("adversarial path takes exactly 2n-3 rounds") {
    for (const int n : {2, 5, 100}) {
        const auto sched = adversarial_path_schedule(n);
        auto cfg = basic_config(Model::quasirandom_rolling, sched.start, 0,
                                default_adversarial_rounds(n));
        const auto trace = simulate(sched.graph, sched.lists, cfg, sched.offsets);
        CHECK(trace.broadcast_time == 2 * n - 3);
    }
}

TEST_CASE("two-vertex broadcast finishes in one round in every model") {
    const Graph g = make_complete(2);
    const auto lists = make_lists(g, ListStrategy::natural);
    for (const auto model : {Model::fully_random, Model::quasirandom_rolling, Model::quasirandom_literal}) {
        const auto trace = simulate(g, lists, basic_config(model, 0, 3, 10));
        CHECK(trace.broadcast_time == 1);
    }
}

TEST_CASE("star from the hub flushes all leaves in exactly deg(hub) rounds") {
    const Graph g = make_kary_tree(4, 1);  // hub 0 with 4 leaves
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto lists = make_lists(g, ListStrategy::random, seed);
        const auto trace =
            simulate(g, lists, basic_config(Model::quasirandom_rolling, 0, seed, 100));
        CHECK(trace.broadcast_time == 4);
    }
}

TEST_CASE("informed growth is monotone and at most doubles") {
    for (const auto model : {Model::fully_random, Model::quasirandom_rolling}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Graph g = make_gnp(60, 0.1, seed);
            if (!is_connected(g)) continue;
            const auto lists = make_lists(g, ListStrategy::random, seed);
            const auto trace = simulate(g, lists, basic_config(model, 0, seed, 500));
            for (std::size_t t = 1; t < trace.informed_counts.size(); ++t) {
                CHECK(trace.informed_counts[t] >= trace.informed_counts[t - 1]);
                CHECK(trace.informed_counts[t] <= 2 * trace.informed_counts[t - 1]);
            }
        }
    }
}

TEST_CASE("a vertex calls each neighbor exactly once per full list cycle") {
    const Graph g = make_complete(7);
    const auto lists = make_lists(g, ListStrategy::random, 4);
    auto cfg = basic_config(Model::quasirandom_rolling, 0, 9, 40);
    cfg.record_trace = true;
    const auto trace = simulate(g, lists, cfg);

    std::map<int, std::vector<int>> calls_by_vertex;
    for (const auto& e : trace.events) calls_by_vertex[e.caller].push_back(e.callee);
    for (const auto& [caller, callees] : calls_by_vertex) {
        const int deg = g.degree(caller);
        for (std::size_t first = 0; first + deg <= callees.size(); first += deg) {
            std::vector<int> window(callees.begin() + first, callees.begin() + first + deg);
            std::sort(window.begin(), window.end());
            CHECK(window == g.neighbors(caller));
        }
    }
}

TEST_CASE("deterministic bounds hold across random instances") {
    SplitMix64 seeds(77);
    for (int i = 0; i < 60; ++i) {
        const Graph g = make_gnp(50, 0.12, seeds.next());
        if (!is_connected(g)) continue;
        const auto m = metrics(g);
        const auto lists = make_lists(g, ListStrategy::random, seeds.next());
        const int start = static_cast<int>(seeds.below(50));
        const auto trace = simulate(
            g, lists, basic_config(Model::quasirandom_rolling, start, seeds.next(), 4 * 50));
        REQUIRE(trace.broadcast_time != Trace::kNever);
        CHECK(trace.broadcast_time <= m.max_degree * m.diameter);
        CHECK(trace.broadcast_time <= 2 * 50 - 3);
    }
}

TEST_CASE("identical configuration reproduces the trace, fully random included") {
    const Graph g = make_hypercube(5);
    const auto lists = make_lists(g, ListStrategy::natural);
    auto cfg = basic_config(Model::fully_random, 3, 123, 200);
    cfg.record_trace = true;
    const auto a = simulate(g, lists, cfg);
    const auto b = simulate(g, lists, cfg);
    REQUIRE(a.events.size() == b.events.size());
    CHECK(a.broadcast_time == b.broadcast_time);
    for (std::size_t i = 0; i < a.events.size(); ++i) {
        CHECK(a.events[i].caller == b.events[i].caller);
        CHECK(a.events[i].callee == b.events[i].callee);
        CHECK(a.events[i].round == b.events[i].round);
    }
}

TEST_CASE("literal and rolling semantics couple to identical trajectories") {
    SplitMix64 seeds(2025);
    for (int i = 0; i < 100; ++i) {
        const Graph g = make_gnp(40, 0.15, seeds.next());
        if (!is_connected(g)) continue;
        const auto lists = make_lists(g, ListStrategy::random, seeds.next());
        const auto offsets = draw_offsets(g, seeds.next());
        const int start = static_cast<int>(seeds.below(40));
        const int cap = default_adversarial_rounds(40);

        const auto rolling =
            simulate(g, lists, basic_config(Model::quasirandom_rolling, start, 0, cap), offsets);
        REQUIRE(rolling.broadcast_time != Trace::kNever);

        // Coupling: a vertex informed at round tau starts its literal walk
        // exactly where the rolling schedule stands at round tau + 1.
        Offsets first_positions;
        first_positions.index.assign(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            const int deg = g.degree(v);
            if (deg == 0) continue;
            const int tau = rolling.informed_at[v];
            if (tau == Trace::kNever) continue;
            first_positions.index[v] = (offsets.index[v] + tau) % deg;
        }
        const auto literal = simulate(
            g, lists, basic_config(Model::quasirandom_literal, start, 0, cap), first_positions);
        CHECK(literal.informed_at == rolling.informed_at);
    }
}

TEST_CASE("first-call distribution is uniform under both semantics") {
    const Graph g = make_complete(5);
    const auto lists = make_lists(g, ListStrategy::natural);

    const Graph leaf_graph = make_path(2);
    const auto leaf_lists = make_lists(leaf_graph, ListStrategy::natural);
    const auto single = first_call_distribution(leaf_graph, leaf_lists, 0, 100, 1);
    CHECK(single.rolling_freq[0] == doctest::Approx(1.0));
    CHECK(single.literal_freq[0] == doctest::Approx(1.0));

    const int samples = 100000;
    const auto table = first_call_distribution(g, lists, 2, samples, 9);
    std::vector<int> rolling_counts, literal_counts;
    for (int i = 0; i < 4; ++i) {
        CHECK(table.rolling_freq[i] == doctest::Approx(0.25).epsilon(0.04));
        CHECK(table.literal_freq[i] == doctest::Approx(0.25).epsilon(0.04));
        rolling_counts.push_back(static_cast<int>(std::lround(table.rolling_freq[i] * samples)));
        literal_counts.push_back(static_cast<int>(std::lround(table.literal_freq[i] * samples)));
    }
    CHECK(chi_square_pvalue(chi_square_uniform_stat(rolling_counts), 3) > 1e-3);
    CHECK(chi_square_pvalue(chi_square_uniform_stat(literal_counts), 3) > 1e-3);
}

TEST_CASE("fully random star broadcast matches the coupon collector mean") {
    const int leaves = 32;
    const Graph g = make_kary_tree(leaves, 1);
    const auto lists = make_lists(g, ListStrategy::natural);
    const int trials = 10000;
    double total = 0.0;
    for (int i = 0; i < trials; ++i) {
        const auto trace = simulate(
            g, lists, basic_config(Model::fully_random, 0, derive(5, i), 4000));
        REQUIRE(trace.broadcast_time != Trace::kNever);
        total += trace.broadcast_time;
    }
    const double expected = leaves * oracles::harmonic(leaves);
    CHECK(total / trials == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("timeouts set the never sentinel without an error") {
    const auto sched = adversarial_path_schedule(30);
    auto cfg = basic_config(Model::quasirandom_rolling, sched.start, 0, 5);
    const auto trace = simulate(sched.graph, sched.lists, cfg, sched.offsets);
    CHECK(trace.broadcast_time == Trace::kNever);
    CHECK(trace.rounds_run == 5);
    int informed = 0;
    for (int t : trace.informed_at)
        if (t != Trace::kNever) ++informed;
    CHECK(informed == trace.informed_counts.back());
}

TEST_CASE("call loss slows spreading but keeps determinism") {
    const Graph g = make_complete(16);
    const auto lists = make_lists(g, ListStrategy::natural);
    auto cfg = basic_config(Model::fully_random, 0, 5, 4000);
    cfg.loss_probability = 0.5;
    const auto a = simulate(g, lists, cfg);
    const auto b = simulate(g, lists, cfg);
    CHECK(a.broadcast_time == b.broadcast_time);
    REQUIRE(a.broadcast_time != Trace::kNever);

    cfg.loss_probability = 0.0;
    const auto lossless = simulate(g, lists, cfg);
    CHECK(lossless.broadcast_time <= a.broadcast_time);
}

TEST_CASE("configuration validation") {
    const Graph g = make_complete(4);
    const auto lists = make_lists(g, ListStrategy::natural);
    CHECK_THROWS_AS(simulate(g, lists, basic_config(Model::fully_random, 0, 0, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate(g, lists, basic_config(Model::fully_random, 4, 0, 10)),
                    std::invalid_argument);
    auto cfg = basic_config(Model::fully_random, 0, 0, 10);
    cfg.loss_probability = 1.0;
    CHECK_THROWS_AS(simulate(g, lists, cfg), std::invalid_argument);
}

TEST_CASE("informed_at agrees with the recorded events") {
    const Graph g = make_hypercube(4);
    const auto lists = make_lists(g, ListStrategy::random, 8);
    auto cfg = basic_config(Model::quasirandom_rolling, 0, 21, 200);
    cfg.record_trace = true;
    const auto trace = simulate(g, lists, cfg);
    std::vector<int> first_event(g.n(), Trace::kNever);
    for (const auto& e : trace.events) {
        if (e.newly_informed) {
            CHECK(first_event[e.callee] == Trace::kNever);
            first_event[e.callee] = e.round;
        }
    }
    first_event[0] = 0;
    CHECK(first_event == trace.informed_at);
}
