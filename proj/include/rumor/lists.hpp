#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rumor/graph.hpp"

namespace rumor {

enum class ListStrategy { natural, random, explicit_order };

std::string to_string(ListStrategy s);
ListStrategy list_strategy_from_string(const std::string& s);

/// Per-vertex cyclic calling order: order[v] is a permutation of the
/// neighbors of v. A vertex walks this list round by round, wrapping at
/// the end.
struct ListAssignment {
    std::vector<std::vector<int>> order;
    ListStrategy strategy = ListStrategy::natural;
};

// natural: ascending neighbor ids (the adjacency order).
// random: an independent uniform permutation per vertex, derived from seed.
ListAssignment make_lists(const Graph& g, ListStrategy strategy, std::uint64_t seed = 0);

// Validates that order[v] is a permutation of the neighbors of v.
ListAssignment make_explicit_lists(const Graph& g, std::vector<std::vector<int>> order);

/// Initial list positions: vertex v's first scheduled callee is
/// order[v][index[v]].
struct Offsets {
    std::vector<int> index;
};

// Uniform initial position per vertex, from per-vertex derived streams.
Offsets draw_offsets(const Graph& g, std::uint64_t seed);

// Per-vertex id arrays, JSON.
void write_lists_json(const ListAssignment& lists, std::ostream& out);

}  // namespace rumor
