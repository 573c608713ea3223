#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

namespace rumor {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Immutable simple undirected graph. Vertices are 0..n-1, adjacency lists
/// are sorted ascending and symmetric by construction.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list; rejects self-loops, out-of-range ids and
    // duplicate edges (in either orientation).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
};

struct GraphMetrics {
    int min_degree = 0;
    double avg_degree = 0.0;  // 2|E|/n
    int max_degree = 0;
    int diameter = 0;  // kUnreachable when disconnected
    bool connected = false;
};

GraphMetrics metrics(const Graph& g);

// Distances from src; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int src);

// Max finite distance from src (kUnreachable if not all vertices reached).
int eccentricity(const Graph& g, int src);

bool is_connected(const Graph& g);

// Layers[i] = all vertices at distance exactly i from u, for i = 0..k_max,
// each sorted ascending. Trailing layers may be empty.
std::vector<std::vector<int>> neighborhood_layers(const Graph& g, int u, int k_max);

// Text edge-list format: first line "n m", then m lines "u v" with 0-based
// ids, u < v, sorted lexicographically.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

}  // namespace rumor
