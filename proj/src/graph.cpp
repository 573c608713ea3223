#include "rumor/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rumor {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreachable);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g.n()));
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        int dv = dist[v];
        for (int w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int eccentricity(const Graph& g, int src) {
    auto dist = bfs_distances(g, src);
    int ecc = 0;
    for (int d : dist) {
        if (d == kUnreachable) return kUnreachable;
        ecc = std::max(ecc, d);
    }
    return ecc;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return eccentricity(g, 0) != kUnreachable;
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    const int n = g.n();
    if (n == 0) {
        m.connected = true;
        return m;
    }
    m.min_degree = kUnreachable;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        m.min_degree = std::min(m.min_degree, d);
        m.max_degree = std::max(m.max_degree, d);
    }
    m.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);

    // Exact diameter by BFS from every vertex. The first sweep doubles as
    // the connectivity probe: if it misses a vertex there is no diameter.
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    int diameter = 0;
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        queue.clear();
        dist[src] = 0;
        queue.push_back(src);
        int far = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            int dv = dist[v];
            for (int w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dv + 1;
                    far = dv + 1;
                    queue.push_back(w);
                }
            }
        }
        if (static_cast<int>(queue.size()) != n) {
            m.connected = false;
            m.diameter = kUnreachable;
            return m;
        }
        diameter = std::max(diameter, far);
    }
    m.connected = true;
    m.diameter = diameter;
    return m;
}

std::vector<std::vector<int>> neighborhood_layers(const Graph& g, int u, int k_max) {
    if (u < 0 || u >= g.n()) throw std::invalid_argument("neighborhood_layers: vertex out of range");
    if (k_max < 0) throw std::invalid_argument("neighborhood_layers: negative radius");
    auto dist = bfs_distances(g, u);
    std::vector<std::vector<int>> layers(static_cast<std::size_t>(k_max) + 1);
    for (int v = 0; v < g.n(); ++v) {
        if (dist[v] != kUnreachable && dist[v] <= k_max) layers[dist[v]].push_back(v);
    }
    return layers;  // ids already ascending: v sweeps in order
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u) out << u << ' ' << v << '\n';
        }
    }
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated at line " + std::to_string(i + 2));
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace rumor
