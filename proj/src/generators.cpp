#include "rumor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "rumor/rng.hpp"

namespace rumor {

std::string to_string(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::hypercube: return "hypercube";
        case Family::gnp: return "gnp";
        case Family::random_regular: return "random_regular";
        case Family::fixed_degree_sequence: return "fixed_degree_sequence";
        case Family::kary_tree: return "kary_tree";
        case Family::path: return "path";
        case Family::two_clique_hub: return "two_clique_hub";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "complete") return Family::complete;
    if (s == "hypercube") return Family::hypercube;
    if (s == "gnp") return Family::gnp;
    if (s == "random_regular") return Family::random_regular;
    if (s == "fixed_degree_sequence") return Family::fixed_degree_sequence;
    if (s == "kary_tree") return Family::kary_tree;
    if (s == "path") return Family::path;
    if (s == "two_clique_hub") return Family::two_clique_hub;
    throw std::invalid_argument("unknown graph family: " + s);
}

bool is_random_family(Family f) {
    return f == Family::gnp || f == Family::random_regular || f == Family::fixed_degree_sequence;
}

namespace {

constexpr int kMaxVertices = 1 << 22;

int kary_vertex_count(int k, int depth) {
    long long total = 0, level = 1;
    for (int i = 0; i <= depth; ++i) {
        total += level;
        level *= k;
        if (total > kMaxVertices) throw std::invalid_argument("kary_tree: too many vertices");
    }
    return static_cast<int>(total);
}

}  // namespace

void validate(const GraphSpec& spec) {
    switch (spec.family) {
        case Family::complete:
            if (spec.n < 2 || spec.n > kMaxVertices) throw std::invalid_argument("complete: need 2 <= n");
            break;
        case Family::hypercube:
            if (spec.d < 1 || spec.d > 22) throw std::invalid_argument("hypercube: need 1 <= d <= 22");
            break;
        case Family::gnp:
            if (spec.n < 1 || spec.n > kMaxVertices) throw std::invalid_argument("gnp: need n >= 1");
            if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("gnp: need 0 <= p <= 1");
            break;
        case Family::random_regular:
            if (spec.n < 1 || spec.n > kMaxVertices) throw std::invalid_argument("random_regular: need n >= 1");
            if (spec.d < 0 || spec.d >= spec.n) throw std::invalid_argument("random_regular: need 0 <= d < n");
            if ((static_cast<long long>(spec.n) * spec.d) % 2 != 0)
                throw std::invalid_argument("random_regular: n*d must be even");
            break;
        case Family::fixed_degree_sequence: {
            if (spec.degrees.empty()) throw std::invalid_argument("fixed_degree_sequence: empty sequence");
            long long sum = 0;
            const int n = static_cast<int>(spec.degrees.size());
            for (int d : spec.degrees) {
                if (d < 0 || d >= n) throw std::invalid_argument("fixed_degree_sequence: need 0 <= d_i < n");
                sum += d;
            }
            if (sum % 2 != 0) throw std::invalid_argument("fixed_degree_sequence: degree sum must be even");
            break;
        }
        case Family::kary_tree:
            if (spec.k < 2) throw std::invalid_argument("kary_tree: need k >= 2");
            if (spec.depth < 1) throw std::invalid_argument("kary_tree: need depth >= 1");
            kary_vertex_count(spec.k, spec.depth);
            break;
        case Family::path:
            if (spec.n < 2 || spec.n > kMaxVertices) throw std::invalid_argument("path: need n >= 2");
            break;
        case Family::two_clique_hub:
            if (spec.n < 5 || spec.n > kMaxVertices) throw std::invalid_argument("two_clique_hub: need n >= 5");
            break;
    }
}

int spec_vertex_count(const GraphSpec& spec) {
    switch (spec.family) {
        case Family::hypercube: return 1 << spec.d;
        case Family::fixed_degree_sequence: return static_cast<int>(spec.degrees.size());
        case Family::kary_tree: return kary_vertex_count(spec.k, spec.depth);
        default: return spec.n;
    }
}

Graph generate(const GraphSpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::complete: return make_complete(spec.n);
        case Family::hypercube: return make_hypercube(spec.d);
        case Family::gnp: return make_gnp(spec.n, spec.p, spec.seed);
        case Family::random_regular: return make_random_regular(spec.n, spec.d, spec.seed, spec.retry_cap);
        case Family::fixed_degree_sequence:
            return make_fixed_degree_sequence(spec.degrees, spec.seed, spec.retry_cap);
        case Family::kary_tree: return make_kary_tree(spec.k, spec.depth);
        case Family::path: return make_path(spec.n);
        case Family::two_clique_hub: return make_two_clique_hub(spec.n);
    }
    throw std::invalid_argument("unreachable family");
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph make_hypercube(int d) {
    const int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * d / 2);
    for (int u = 0; u < n; ++u) {
        for (int bit = 0; bit < d; ++bit) {
            int v = u ^ (1 << bit);
            if (v > u) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph make_kary_tree(int k, int depth) {
    const int n = kary_vertex_count(k, depth);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / k, v);
    return Graph::from_edges(n, edges);
}

TwoCliqueLayout two_clique_layout(int n) { return {n / 2, n - 1}; }

Graph make_two_clique_hub(int n) {
    const auto layout = two_clique_layout(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < layout.clique1_size; ++u)
        for (int v = u + 1; v < layout.clique1_size; ++v) edges.emplace_back(u, v);
    for (int u = layout.clique1_size; u < n - 1; ++u)
        for (int v = u + 1; v < n - 1; ++v) edges.emplace_back(u, v);
    for (int u = 0; u < n - 1; ++u) edges.emplace_back(u, layout.hub);
    return Graph::from_edges(n, edges);
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
    std::vector<std::pair<int, int>> edges;
    if (p >= 1.0) return make_complete(n);
    if (p > 0.0) {
        // Geometric skip sampling over the lower-triangular pair order
        // (Batagelj/Brandes); O(n + m) draws, deterministic per seed.
        SplitMix64 rng(derive(seed, streams::graph_gen));
        const double log1mp = std::log1p(-p);
        int v = 1;
        long long w = -1;
        while (v < n) {
            double u = 1.0 - rng.u01();  // (0, 1]
            w += 1 + static_cast<long long>(std::floor(std::log(u) / log1mp));
            while (w >= v && v < n) {
                w -= v;
                ++v;
            }
            if (v < n) edges.emplace_back(static_cast<int>(w), v);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

// Random graph with the given degrees via stub pairing that only accepts
// legal pairs (no loop, no repeated edge); restarts from scratch when the
// remaining stubs admit no legal pair. Near-uniform over simple graphs for
// the degree ranges used here.
Graph pair_degree_sequence(const std::vector<int>& degrees, std::uint64_t seed, int retry_cap) {
    const int n = static_cast<int>(degrees.size());
    const long long stub_total = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (stub_total % 2 != 0) throw std::invalid_argument("degree sum must be even");

    SplitMix64 rng(derive(seed, streams::graph_gen));
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(stub_total));

    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[v]), v);

        std::unordered_set<std::uint64_t> present;
        present.reserve(static_cast<std::size_t>(stub_total));
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(stub_total / 2));

        auto key = [n](int a, int b) {
            if (a > b) std::swap(a, b);
            return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(b);
        };

        bool stuck = false;
        while (!stubs.empty()) {
            bool paired = false;
            for (int tries = 0; tries < 64 && !paired; ++tries) {
                std::size_t i = static_cast<std::size_t>(rng.below(stubs.size()));
                std::size_t j = static_cast<std::size_t>(rng.below(stubs.size() - 1));
                if (j >= i) ++j;
                int u = stubs[i], v = stubs[j];
                if (u == v || present.count(key(u, v))) continue;
                present.insert(key(u, v));
                edges.emplace_back(u, v);
                if (i < j) std::swap(i, j);
                stubs[i] = stubs.back();
                stubs.pop_back();
                stubs[j] = stubs.back();
                stubs.pop_back();
                paired = true;
            }
            if (paired) continue;

            // Unlucky streak or genuinely stuck: scan for any legal pair.
            stuck = true;
            for (std::size_t i = 0; i < stubs.size() && stuck; ++i)
                for (std::size_t j = i + 1; j < stubs.size(); ++j)
                    if (stubs[i] != stubs[j] && !present.count(key(stubs[i], stubs[j]))) {
                        stuck = false;
                        break;
                    }
            if (stuck) break;
        }
        if (!stuck) return Graph::from_edges(n, edges);
    }
    throw std::runtime_error("degree-sequence generation: retry cap exhausted");
}

}  // namespace

Graph make_random_regular(int n, int d, std::uint64_t seed, int retry_cap) {
    return pair_degree_sequence(std::vector<int>(static_cast<std::size_t>(n), d), seed, retry_cap);
}

Graph make_fixed_degree_sequence(const std::vector<int>& degrees, std::uint64_t seed, int retry_cap) {
    return pair_degree_sequence(degrees, seed, retry_cap);
}

bool is_hypercube(const Graph& g) {
    const int n = g.n();
    if (n < 2 || (n & (n - 1)) != 0) return false;
    int d = 0;
    while ((1 << d) < n) ++d;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != d) return false;
        for (int bit = 0; bit < d; ++bit)
            if (!g.has_edge(v, v ^ (1 << bit))) return false;
    }
    return true;
}

}  // namespace rumor
