#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>

#include "rumor/generators.hpp"
#include "rumor/graph.hpp"
#include "rumor/spectral.hpp"

using namespace rumor;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("complete graph spectrum {n-1, -1 repeated}") {
    for (const int n : {8, 64}) {
        const auto report = spectral(make_complete(n));
        CHECK(report.lambda1 == doctest::Approx(n - 1).epsilon(1e-10));
        CHECK(report.lambda == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(report.is_regular);
        REQUIRE(report.ramanujan_pass.has_value());
        CHECK(*report.ramanujan_pass);  // 1 <= 2 sqrt(n-2)
        CHECK(report.residual_lambda1 <= 1e-8);
        CHECK(report.residual_lambda <= 1e-8);
    }
}

TEST_CASE("five-cycle extremal eigenvalue is the golden ratio") {
    const auto report = spectral(cycle(5));
    CHECK(report.lambda == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));
    CHECK(report.lambda1 == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("hypercube spectrum is the binomial ladder d-2k") {
    const auto report = spectral(make_hypercube(4));
    CHECK(report.lambda1 == doctest::Approx(4.0).epsilon(1e-10));
    // Bipartite: the smallest eigenvalue is -d, so the extremal magnitude
    // matches lambda1.
    CHECK(report.lambda == doctest::Approx(4.0).epsilon(1e-10));
    REQUIRE(report.eigenvalues.size() == 16);
    std::vector<double> expected;
    for (int k = 0; k <= 4; ++k) {
        const int multiplicity = k == 0 || k == 4 ? 1 : (k == 1 || k == 3 ? 4 : 6);
        for (int i = 0; i < multiplicity; ++i) expected.push_back(4.0 - 2.0 * k);
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(report.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("trace identities") {
    for (const auto& g : {make_hypercube(5), make_complete(20), make_random_regular(60, 6, 3)}) {
        const auto report = spectral(g);
        const double sum = std::accumulate(report.eigenvalues.begin(), report.eigenvalues.end(), 0.0);
        double sum_sq = 0.0;
        for (double ev : report.eigenvalues) sum_sq += ev * ev;
        int max_degree = 0;
        for (int v = 0; v < g.n(); ++v) max_degree = std::max(max_degree, g.degree(v));
        CHECK(std::abs(sum) <= 1e-6 * g.n());
        CHECK(std::abs(sum_sq - 2.0 * static_cast<double>(g.edge_count())) <= 1e-6 * g.n() * max_degree);
    }
}

TEST_CASE("lambda1 equals the degree for connected regular graphs") {
    const Graph g = make_random_regular(100, 6, 11);
    REQUIRE(is_connected(g));
    const auto report = spectral(g);
    CHECK(report.lambda1 == doctest::Approx(6.0).epsilon(1e-9));
    // Connected and non-bipartite in practice at this density: strict gap.
    CHECK(report.lambda < 6.0 - 1e-6);
    CHECK(report.strong_expander_constant == doctest::Approx(report.lambda / std::sqrt(6.0)));
}

TEST_CASE("non-regular graphs have no ramanujan verdict") {
    const auto report = spectral(make_kary_tree(4, 2));
    CHECK_FALSE(report.is_regular);
    CHECK_FALSE(report.ramanujan_pass.has_value());
    CHECK_THROWS_AS(mixing_check(make_kary_tree(4, 2), 1.0, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(tanner_check(make_kary_tree(4, 2), 1.0, 5, 0), std::invalid_argument);
}

TEST_CASE("edge-count deviation bound holds on full and empty sets") {
    const Graph g = make_complete(10);
    const auto report = spectral(g);
    // A = B = V: ordered adjacent pairs = 2m = 90 = d|A||B|/n exactly.
    long long ordered = 0;
    for (int v = 0; v < g.n(); ++v) ordered += g.degree(v);
    CHECK(ordered == 90);
    CHECK(std::abs(static_cast<double>(ordered) - 9.0 * 10.0 * 10.0 / 10.0) <=
          report.lambda * 10.0);
}

TEST_CASE("mixing and neighborhood bounds never report violations on regular graphs") {
    std::vector<Graph> graphs;
    graphs.push_back(make_complete(10));
    graphs.push_back(make_hypercube(6));
    graphs.push_back(cycle(17));
    for (std::uint64_t s = 0; s < 3; ++s) graphs.push_back(make_random_regular(100, 8, s));
    for (const auto& g : graphs) {
        const auto report = spectral(g);
        const auto mix = mixing_check(g, report.lambda, 100, 5);
        CHECK(mix.max_violation <= 1e-6);
        const auto tan = tanner_check(g, report.lambda, 100, 5);
        CHECK(tan.max_violation <= 1e-6);
    }
}
