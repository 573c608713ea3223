#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "rumor/generators.hpp"
#include "rumor/lists.hpp"

using namespace rumor;

TEST_CASE("natural lists follow ascending neighbor ids") {
    const Graph g = make_path(3);
    const auto lists = make_lists(g, ListStrategy::natural);
    CHECK(lists.order[1] == std::vector<int>{0, 2});
    CHECK(lists.order[0] == std::vector<int>{1});
}

TEST_CASE("random lists are per-vertex permutations, deterministic per seed") {
    const Graph g = make_complete(6);
    const auto a = make_lists(g, ListStrategy::random, 5);
    const auto b = make_lists(g, ListStrategy::random, 5);
    const auto c = make_lists(g, ListStrategy::random, 6);
    CHECK(a.order == b.order);
    CHECK(a.order != c.order);
    for (int v = 0; v < g.n(); ++v) {
        auto sorted = a.order[v];
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == g.neighbors(v));
    }
}

TEST_CASE("explicit lists are validated") {
    const Graph g = make_path(3);
    CHECK_THROWS_AS(make_explicit_lists(g, {{1}, {0, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_explicit_lists(g, {{1}, {0, 2}}), std::invalid_argument);
    const auto ok = make_explicit_lists(g, {{1}, {2, 0}, {1}});
    CHECK(ok.order[1] == std::vector<int>{2, 0});
}

TEST_CASE("offsets are in range and reproducible") {
    const Graph g = make_kary_tree(3, 2);
    const auto a = draw_offsets(g, 11);
    const auto b = draw_offsets(g, 11);
    CHECK(a.index == b.index);
    for (int v = 0; v < g.n(); ++v) {
        CHECK(a.index[v] >= 0);
        CHECK(a.index[v] < std::max(1, g.degree(v)));
    }
}
