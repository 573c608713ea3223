#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "rumor/expansion.hpp"
#include "rumor/generators.hpp"
#include "rumor/graph.hpp"
#include "rumor/rng.hpp"

using namespace rumor;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("complete graph minimum boundary ratio, exact window of size-3 subsets") {
    const Graph g = make_complete(10);
    ExpansionParams params;
    params.c_alpha = 1.0;
    const auto report = audit_p1(g, params, AuditMode::exact, 0);
    CHECK(report.min_observed_ratio == doctest::Approx(7.0 / 27.0).epsilon(1e-12));
    CHECK(report.witness.size() == 3);
    CHECK(report.pass);
}

TEST_CASE("exact enumeration agrees with the bitmask oracle") {
    SplitMix64 seeds(5150);
    ExpansionParams params;  // c_alpha 2 by default
    std::vector<Graph> graphs;
    graphs.push_back(make_path(8));
    graphs.push_back(cycle(9));
    graphs.push_back(make_kary_tree(2, 2));
    graphs.push_back(make_hypercube(3));
    graphs.push_back(make_complete(7));
    for (int i = 0; i < 6; ++i) {
        const Graph g = make_gnp(9, 0.4, seeds.next());
        if (is_connected(g)) graphs.push_back(g);
    }
    for (const auto& g : graphs) {
        const auto [lo, hi] = p1_size_window(g, params);
        const double oracle = oracles::p1_min_ratio_bitmask(g, lo, hi);
        const auto report = audit_p1(g, params, AuditMode::exact, 0);
        CHECK(report.min_observed_ratio == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("sampled minimum never undercuts the exact minimum") {
    const Graph g = make_hypercube(4);
    ExpansionParams params;
    const auto exact = audit_p1(g, params, AuditMode::exact, 0);
    const auto sampled = audit_p1(g, params, AuditMode::sampled, 500, 3);
    CHECK(sampled.min_observed_ratio >= exact.min_observed_ratio - 1e-12);
}

TEST_CASE("k-ary trees fail vertex expansion with a boundary-1 witness") {
    const Graph g = make_kary_tree(3, 3);
    ExpansionParams params;
    const auto report = audit_p1(g, params, AuditMode::sampled, 200, 1);
    CHECK_FALSE(report.pass);
    REQUIRE(!report.witness.empty());
    CHECK(boundary_size(g, report.witness) == 1);
}

TEST_CASE("hypercube records its Hamming-level witness") {
    const Graph g = make_hypercube(8);
    ExpansionParams params;
    const auto report = audit_p1(g, params, AuditMode::sampled, 50, 1);
    REQUIRE(report.level_set_ratio.has_value());
    // S = Hamming levels 1..floor(ln 8) = L1 u L2, |S| = 36. The exact
    // boundary is L3 plus the all-zeros vertex: C(8,3) + 1 = 57.
    CHECK(*report.level_set_ratio == doctest::Approx(57.0 / 288.0).epsilon(1e-12));
    CHECK(report.min_observed_ratio <= *report.level_set_ratio);
}

TEST_CASE("edge expansion on complete graphs never finds deficient vertices") {
    const Graph g = make_complete(12);
    ExpansionParams params;
    const auto report = audit_p2(g, params, 5, 11);
    CHECK(report.pass);
    // Every outside vertex has |S| neighbors inside, so the worst excess is
    // just the negated budget of the largest sampled subset.
    CHECK(report.max_deficient_excess < 0.0);
}

TEST_CASE("star leaf set leaves the hub well connected") {
    const Graph g = make_kary_tree(9, 1);  // hub 0, leaves 1..9
    std::vector<char> in_s(g.n(), 1);
    in_s[0] = 0;  // S = all leaves
    const double d = 2.0 * static_cast<double>(g.edge_count()) / g.n();
    const double need = 0.5 * d * 9.0 / 10.0;
    int deficient = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (in_s[v]) continue;
        int inside = 0;
        for (int w : g.neighbors(v)) inside += in_s[w];
        if (static_cast<double>(inside) < need) ++deficient;
    }
    CHECK(deficient == 0);  // hub has 9 >= 0.81 neighbors inside
}

TEST_CASE("random regular graphs pass the sampled audits") {
    const Graph g = make_random_regular(128, 8, 77);
    REQUIRE(is_connected(g));
    ExpansionParams params;
    const auto all = audit_all(g, params, AuditMode::sampled, 400, 5, 21);
    CHECK(all.p1.pass);
    CHECK(all.p2.pass);
    CHECK(all.p3.pass);
}

TEST_CASE("degree regularity verdicts") {
    ExpansionParams params;
    const auto regular = audit_p3(make_hypercube(5), params);
    CHECK(regular.pass);
    CHECK(regular.delta_ratio == doctest::Approx(1.0));
    CHECK(regular.max_ratio == doctest::Approx(1.0));

    const auto star = audit_p3(make_kary_tree(99, 1), params);
    CHECK_FALSE(star.pass);
    CHECK(star.max_ratio > 5.0);  // 99 / 1.98 = 50
    CHECK(star.max_degree == 99);
    CHECK(star.avg_degree == doctest::Approx(1.98));
}

TEST_CASE("audit error paths") {
    const Graph disconnected = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    ExpansionParams params;
    CHECK_THROWS_AS(audit_p1(disconnected, params, AuditMode::sampled, 10), std::invalid_argument);
    CHECK_THROWS_AS(audit_p2(disconnected, params, 5), std::invalid_argument);
    CHECK_THROWS_AS(audit_p1(make_path(3), params, AuditMode::exact, 0), std::invalid_argument);
    CHECK_THROWS_AS(audit_p1(make_complete(64), params, AuditMode::exact, 0), std::invalid_argument);
}

TEST_CASE("report serializes with stable field names") {
    const Graph g = make_complete(8);
    ExpansionParams params;
    const auto all = audit_all(g, params, AuditMode::sampled, 50, 3, 1);
    const auto json = to_json(all);
    CHECK(json.find("\"p1\":{\"min_observed_ratio\":") != std::string::npos);
    CHECK(json.find("\"p2\":{\"max_deficient_excess\":") != std::string::npos);
    CHECK(json.find("\"p3\":{\"delta\":") != std::string::npos);
    CHECK(json.find("\"witness\":[") != std::string::npos);
}
