#include "rumor/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rumor/generators.hpp"
#include "rumor/rng.hpp"

namespace rumor {

namespace {

double avg_degree(const Graph& g) {
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.n());
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("expansion audit: graph is disconnected");
}

}  // namespace

std::pair<int, int> p1_size_window(const Graph& g, const ExpansionParams& params) {
    const int n = g.n();
    if (n <= 3) throw std::invalid_argument("p1 audit: size window empty (n <= 3)");
    const double cap = params.c_alpha * static_cast<double>(n) / avg_degree(g);
    int hi = std::max(3, static_cast<int>(std::floor(cap)));
    hi = std::min(hi, n - 1);
    return {3, hi};
}

int boundary_size(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : subset) in[v] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    int count = 0;
    for (int v : subset) {
        for (int w : g.neighbors(v)) {
            if (!in[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
            }
        }
    }
    return count;
}

int neighborhood_size(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : subset) in[v] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    int count = 0;
    for (int v : subset) {
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
            }
        }
    }
    return count;
}

namespace {

struct P1Scan {
    const Graph& g;
    double d;
    int lo, hi;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> witness;
    std::string source;

    void offer(const std::vector<int>& subset, const char* src) {
        const double ratio =
            static_cast<double>(boundary_size(g, subset)) / (d * static_cast<double>(subset.size()));
        if (ratio < best) {
            best = ratio;
            witness = subset;
            std::sort(witness.begin(), witness.end());
            source = src;
        }
    }
};

// Enumerates every connected subset whose minimum vertex is `root`,
// growing only through vertices > root; each subset is visited exactly
// once (new candidates enter the extension set the first time some
// neighbor joins S).
void enumerate_from_root(const Graph& g, int root, int cap, std::vector<int>& subset,
                         std::vector<char>& in_subset, std::vector<char>& adjacent,
                         std::vector<int>& ext, P1Scan& scan) {
    if (static_cast<int>(subset.size()) >= scan.lo) scan.offer(subset, "enumerated");
    if (static_cast<int>(subset.size()) == cap) return;

    std::vector<int> local(ext);
    while (!local.empty()) {
        const int v = local.back();
        local.pop_back();

        std::vector<int> next(local);
        std::vector<int> added;
        for (int w : g.neighbors(v)) {
            if (w > root && !in_subset[w] && !adjacent[w]) {
                next.push_back(w);
                adjacent[w] = 1;
                added.push_back(w);
            }
        }
        subset.push_back(v);
        in_subset[v] = 1;
        enumerate_from_root(g, root, cap, subset, in_subset, adjacent, next, scan);
        in_subset[v] = 0;
        subset.pop_back();
        for (int w : added) adjacent[w] = 0;
    }
}

void scan_exact(const Graph& g, P1Scan& scan) {
    const int n = g.n();
    std::vector<int> subset;
    std::vector<char> in_subset(static_cast<std::size_t>(n), 0);
    std::vector<char> adjacent(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        std::vector<int> ext;
        for (int w : g.neighbors(root))
            if (w > root) {
                ext.push_back(w);
                adjacent[w] = 1;
            }
        subset.push_back(root);
        in_subset[root] = 1;
        enumerate_from_root(g, root, scan.hi, subset, in_subset, adjacent, ext, scan);
        in_subset[root] = 0;
        subset.pop_back();
        for (int w : g.neighbors(root)) adjacent[w] = 0;
    }
}

void scan_grown_subsets(const Graph& g, P1Scan& scan, int sample_count, std::uint64_t seed) {
    const int n = g.n();
    SplitMix64 rng(derive(seed, streams::subset_sampler));
    std::vector<int> subset, boundary;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<char> on_boundary(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < sample_count; ++s) {
        const int target = scan.lo + rng.below_int(scan.hi - scan.lo + 1);
        subset.clear();
        boundary.clear();
        std::fill(in.begin(), in.end(), 0);
        std::fill(on_boundary.begin(), on_boundary.end(), 0);

        int v = rng.below_int(n);
        subset.push_back(v);
        in[v] = 1;
        for (int w : g.neighbors(v)) {
            boundary.push_back(w);
            on_boundary[w] = 1;
        }
        while (static_cast<int>(subset.size()) < target && !boundary.empty()) {
            const std::size_t pick = static_cast<std::size_t>(rng.below(boundary.size()));
            const int u = boundary[pick];
            boundary[pick] = boundary.back();
            boundary.pop_back();
            on_boundary[u] = 0;
            subset.push_back(u);
            in[u] = 1;
            for (int w : g.neighbors(u)) {
                if (!in[w] && !on_boundary[w]) {
                    boundary.push_back(w);
                    on_boundary[w] = 1;
                }
            }
        }
        if (static_cast<int>(subset.size()) >= scan.lo && static_cast<int>(subset.size()) <= scan.hi)
            scan.offer(subset, "grown");
    }
}

void scan_bfs_balls(const Graph& g, P1Scan& scan) {
    const int n = g.n();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> ball;
    for (int u = 0; u < n; ++u) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        ball.clear();
        ball.push_back(u);
        dist[u] = 0;
        std::size_t head = 0;
        int radius_end = 1;  // index where the current radius finishes
        int radius = 0;
        while (head < ball.size() && static_cast<int>(ball.size()) <= scan.hi) {
            if (static_cast<int>(head) == radius_end) {
                ++radius;
                radius_end = static_cast<int>(ball.size());
                if (static_cast<int>(ball.size()) >= scan.lo) scan.offer(ball, "ball");
            }
            const int v = ball[head++];
            for (int w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    ball.push_back(w);
                }
            }
        }
        if (static_cast<int>(ball.size()) >= scan.lo && static_cast<int>(ball.size()) <= scan.hi &&
            static_cast<int>(head) == static_cast<int>(ball.size()))
            scan.offer(ball, "ball");
    }
}

// Components of G - u have boundary exactly {u} in a connected graph; any
// such component inside the size window is the strongest kind of
// expansion witness (a boundary of one).
void scan_cut_components(const Graph& g, P1Scan& scan) {
    const int n = g.n();
    std::vector<int> comp(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int u = 0; u < n; ++u) {
        std::fill(comp.begin(), comp.end(), -1);
        comp[u] = -2;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            queue.clear();
            queue.push_back(s);
            comp[s] = s;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                for (int w : g.neighbors(queue[head])) {
                    if (comp[w] == -1) {
                        comp[w] = s;
                        queue.push_back(w);
                    }
                }
            }
            const int size = static_cast<int>(queue.size());
            if (size >= scan.lo && size <= scan.hi && size < n - 1) scan.offer(queue, "cut");
        }
    }
}

std::optional<double> scan_hypercube_level_set(const Graph& g, P1Scan& scan) {
    if (!is_hypercube(g)) return std::nullopt;
    int d = 0;
    while ((1 << d) < g.n()) ++d;
    const int levels = std::max(1, static_cast<int>(std::floor(std::log(static_cast<double>(d)))));
    std::vector<int> subset;
    for (int v = 0; v < g.n(); ++v) {
        const int weight = __builtin_popcount(static_cast<unsigned>(v));
        if (weight >= 1 && weight <= levels) subset.push_back(v);
    }
    if (static_cast<int>(subset.size()) < 3) return std::nullopt;
    const double ratio =
        static_cast<double>(boundary_size(g, subset)) / (scan.d * static_cast<double>(subset.size()));
    scan.offer(subset, "level_set");
    return ratio;
}

}  // namespace

P1Report audit_p1(const Graph& g, const ExpansionParams& params, AuditMode mode, int sample_count,
                  std::uint64_t seed) {
    require_connected(g);
    const auto [lo, hi] = p1_size_window(g, params);

    P1Scan scan{g, avg_degree(g), lo, hi, std::numeric_limits<double>::infinity(), {}, {}};
    if (mode == AuditMode::exact) {
        if (g.n() > 20) throw std::invalid_argument("p1 audit: exact mode limited to n <= 20");
        scan_exact(g, scan);
    } else {
        scan_grown_subsets(g, scan, sample_count, seed);
        scan_bfs_balls(g, scan);
        const double cut_budget = 2e8;
        if (static_cast<double>(g.n()) * static_cast<double>(g.n() + g.edge_count()) <= cut_budget)
            scan_cut_components(g, scan);
    }

    P1Report report;
    report.mode = mode;
    if (mode == AuditMode::sampled) report.level_set_ratio = scan_hypercube_level_set(g, scan);
    if (!std::isfinite(scan.best)) {
        // No connected subset hit the window (possible on tiny windows in
        // sampled mode); report vacuous pass with an empty witness.
        report.min_observed_ratio = std::numeric_limits<double>::infinity();
        report.pass = true;
        return report;
    }
    report.min_observed_ratio = scan.best;
    report.witness = std::move(scan.witness);
    report.witness_source = std::move(scan.source);
    report.pass = report.min_observed_ratio >= params.c_beta_threshold;
    return report;
}

P2Report audit_p2(const Graph& g, const ExpansionParams& params, int subset_samples,
                  std::uint64_t seed) {
    require_connected(g);
    const int n = g.n();
    const double d = avg_degree(g);

    std::vector<int> sizes;
    for (int s = 3; s < n - 1; s = std::max(s + 1, (s * 3) / 2)) sizes.push_back(s);
    if (n - 1 >= 3) sizes.push_back(n - 1);

    P2Report report;
    report.max_deficient_excess = -std::numeric_limits<double>::infinity();

    SplitMix64 rng(derive(seed, streams::subset_sampler, 2));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int size : sizes) {
        for (int rep = 0; rep < subset_samples; ++rep) {
            // Uniform subset of the given size: partial Fisher-Yates prefix.
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = 0; i < size; ++i) {
                const int j = i + rng.below_int(n - i);
                std::swap(perm[i], perm[j]);
            }
            std::fill(in.begin(), in.end(), 0);
            for (int i = 0; i < size; ++i) in[perm[i]] = 1;

            const double need = params.c_delta * d * static_cast<double>(size) / n;
            int deficient = 0;
            for (int v = 0; v < n; ++v) {
                if (in[v]) continue;
                int inside = 0;
                for (int w : g.neighbors(v)) inside += in[w];
                if (static_cast<double>(inside) < need) ++deficient;
            }
            const double budget =
                params.c_omega * static_cast<double>(n) * static_cast<double>(n) / (d * size);
            const double excess = static_cast<double>(deficient) - budget;
            if (excess > report.max_deficient_excess) {
                report.max_deficient_excess = excess;
                report.witness.assign(perm.begin(), perm.begin() + size);
                std::sort(report.witness.begin(), report.witness.end());
            }
        }
    }
    report.pass = report.max_deficient_excess <= 0.0;
    return report;
}

P3Report audit_p3(const Graph& g, const ExpansionParams& params) {
    P3Report report;
    const int n = g.n();
    report.min_degree = n > 0 ? kUnreachable : 0;
    for (int v = 0; v < n; ++v) {
        report.min_degree = std::min(report.min_degree, g.degree(v));
        report.max_degree = std::max(report.max_degree, g.degree(v));
    }
    report.avg_degree = avg_degree(g);
    report.delta_ratio = report.min_degree / report.avg_degree;
    report.max_ratio = report.max_degree / report.avg_degree;
    report.degree_cap_ok = report.max_degree <= params.p3_max_ratio * report.avg_degree;
    report.min_degree_ok = report.avg_degree <= std::log(static_cast<double>(n)) ||
                           report.min_degree >= params.p3_min_ratio * report.avg_degree;
    report.pass = report.degree_cap_ok && report.min_degree_ok;
    return report;
}

ExpansionReport audit_all(const Graph& g, const ExpansionParams& params, AuditMode p1_mode,
                          int p1_samples, int p2_samples, std::uint64_t seed) {
    ExpansionReport report;
    report.p1 = audit_p1(g, params, p1_mode, p1_samples, seed);
    report.p2 = audit_p2(g, params, p2_samples, seed);
    report.p3 = audit_p3(g, params);
    return report;
}

namespace {

void append_ids(std::ostringstream& out, const std::vector<int>& ids) {
    out << '[';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ',';
        out << ids[i];
    }
    out << ']';
}

}  // namespace

std::string to_json(const ExpansionReport& report) {
    std::ostringstream out;
    out.precision(12);
    out << "{\"p1\":{\"min_observed_ratio\":" << report.p1.min_observed_ratio << ",\"witness\":";
    append_ids(out, report.p1.witness);
    out << ",\"witness_source\":\"" << report.p1.witness_source << "\",\"mode\":\""
        << (report.p1.mode == AuditMode::exact ? "exact" : "sampled") << '"';
    if (report.p1.level_set_ratio) out << ",\"level_set_ratio\":" << *report.p1.level_set_ratio;
    out << ",\"pass\":" << (report.p1.pass ? "true" : "false") << "},";
    out << "\"p2\":{\"max_deficient_excess\":" << report.p2.max_deficient_excess << ",\"witness\":";
    append_ids(out, report.p2.witness);
    out << ",\"pass\":" << (report.p2.pass ? "true" : "false") << "},";
    out << "\"p3\":{\"delta\":" << report.p3.min_degree << ",\"d\":" << report.p3.avg_degree
        << ",\"delta_ratio\":" << report.p3.delta_ratio << ",\"max_ratio\":" << report.p3.max_ratio
        << ",\"pass\":" << (report.p3.pass ? "true" : "false") << "}}";
    return out.str();
}

}  // namespace rumor
