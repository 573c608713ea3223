#include "rumor/lists.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "rumor/rng.hpp"

namespace rumor {

std::string to_string(ListStrategy s) {
    switch (s) {
        case ListStrategy::natural: return "natural";
        case ListStrategy::random: return "random";
        case ListStrategy::explicit_order: return "explicit";
    }
    return "?";
}

ListStrategy list_strategy_from_string(const std::string& s) {
    if (s == "natural") return ListStrategy::natural;
    if (s == "random") return ListStrategy::random;
    if (s == "explicit") return ListStrategy::explicit_order;
    throw std::invalid_argument("unknown list strategy: " + s);
}

ListAssignment make_lists(const Graph& g, ListStrategy strategy, std::uint64_t seed) {
    if (strategy == ListStrategy::explicit_order)
        throw std::invalid_argument("make_lists: explicit lists need make_explicit_lists");
    ListAssignment lists;
    lists.strategy = strategy;
    lists.order = g.adjacency();
    if (strategy == ListStrategy::random) {
        for (int v = 0; v < g.n(); ++v) {
            SplitMix64 rng(derive(seed, streams::list_shuffle, static_cast<std::uint64_t>(v)));
            shuffle(lists.order[v], rng);
        }
    }
    return lists;
}

ListAssignment make_explicit_lists(const Graph& g, std::vector<std::vector<int>> order) {
    if (static_cast<int>(order.size()) != g.n())
        throw std::invalid_argument("explicit lists: wrong vertex count");
    for (int v = 0; v < g.n(); ++v) {
        auto sorted = order[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw std::invalid_argument("explicit lists: order is not a permutation of the neighbors");
    }
    ListAssignment lists;
    lists.strategy = ListStrategy::explicit_order;
    lists.order = std::move(order);
    return lists;
}

Offsets draw_offsets(const Graph& g, std::uint64_t seed) {
    Offsets off;
    off.index.resize(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        int deg = g.degree(v);
        if (deg > 0) {
            SplitMix64 rng(derive(seed, streams::offsets, static_cast<std::uint64_t>(v)));
            off.index[v] = rng.below_int(deg);
        }
    }
    return off;
}

void write_lists_json(const ListAssignment& lists, std::ostream& out) {
    out << "{\"strategy\":\"" << to_string(lists.strategy) << "\",\"order\":[";
    for (std::size_t v = 0; v < lists.order.size(); ++v) {
        if (v) out << ',';
        out << '[';
        for (std::size_t i = 0; i < lists.order[v].size(); ++i) {
            if (i) out << ',';
            out << lists.order[v][i];
        }
        out << ']';
    }
    out << "]}\n";
}

}  // namespace rumor
