#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rumor/graph.hpp"

namespace rumor {

enum class Family {
    complete,
    hypercube,
    gnp,
    random_regular,
    fixed_degree_sequence,
    kary_tree,
    path,
    two_clique_hub,
};

std::string to_string(Family f);
Family family_from_string(const std::string& s);
bool is_random_family(Family f);

/// Parameters for one graph instance. Random families are a pure function
/// of (parameters, seed): equal specs give bit-identical graphs.
struct GraphSpec {
    Family family = Family::complete;
    int n = 0;                 // complete, gnp, random_regular, path, two_clique_hub
    int d = 0;                 // hypercube dimension, random_regular degree
    double p = 0.0;            // gnp edge probability
    int k = 0;                 // kary_tree arity
    int depth = 0;             // kary_tree depth
    std::vector<int> degrees;  // fixed_degree_sequence
    std::uint64_t seed = 0;
    int retry_cap = 10000;     // stub-pairing restarts before giving up
};

// Throws std::invalid_argument when the parameters are out of range for
// the family (e.g. odd n*d for random_regular).
void validate(const GraphSpec& spec);

// Number of vertices the spec will produce.
int spec_vertex_count(const GraphSpec& spec);

Graph generate(const GraphSpec& spec);

Graph make_complete(int n);
Graph make_hypercube(int d);
Graph make_path(int n);
Graph make_kary_tree(int k, int depth);
// Two disjoint cliques covering all vertices but one, plus a hub adjacent
// to every other vertex. Clique 1 is [0, n/2), clique 2 is [n/2, n-1),
// the hub is vertex n-1. For odd n the cliques have equal size.
Graph make_two_clique_hub(int n);
Graph make_gnp(int n, double p, std::uint64_t seed);
Graph make_random_regular(int n, int d, std::uint64_t seed, int retry_cap = 10000);
Graph make_fixed_degree_sequence(const std::vector<int>& degrees, std::uint64_t seed,
                                 int retry_cap = 10000);

// Hub vertex id and first-clique size of make_two_clique_hub(n).
struct TwoCliqueLayout {
    int clique1_size;
    int hub;
};
TwoCliqueLayout two_clique_layout(int n);

// True when g carries the canonical hypercube labeling: n = 2^d and the
// neighbors of every vertex are exactly its single-bit flips.
bool is_hypercube(const Graph& g);

}  // namespace rumor
