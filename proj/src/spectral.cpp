#include "rumor/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rumor/rng.hpp"

namespace rumor {

namespace {

bool regular_degree(const Graph& g, int* degree) {
    if (g.n() == 0) return false;
    const int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d) return false;
    *degree = d;
    return true;
}

Eigen::VectorXd adj_times(const Graph& g, const Eigen::VectorXd& x) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(g.n());
    for (int v = 0; v < g.n(); ++v) {
        double sum = 0.0;
        for (int w : g.neighbors(v)) sum += x[w];
        y[v] = sum;
    }
    return y;
}

// Dominant-in-magnitude eigenpair of B = A - shift * u u^T. Iterates on
// B^2 so sign-symmetric extremal pairs (bipartite graphs) still converge,
// then recovers the signed eigenvalue from the Rayleigh quotient.
std::pair<double, Eigen::VectorXd> power_iterate(const Graph& g, double shift,
                                                 const Eigen::VectorXd& u, double tol,
                                                 int max_iters) {
    const int n = g.n();
    SplitMix64 rng(0x5eedcafef00dULL);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.u01() - 0.5;
    x.normalize();

    auto apply = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd y = adj_times(g, v);
        if (shift != 0.0) y -= shift * u.dot(v) * u;
        return y;
    };

    double value = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        Eigen::VectorXd y = apply(apply(x));
        const double norm = y.norm();
        if (norm == 0.0) return {0.0, x};
        x = y / norm;
        Eigen::VectorXd bx = apply(x);
        const double magnitude = std::sqrt(std::max(0.0, x.dot(apply(bx))));
        value = (bx - magnitude * x).norm() <= (bx + magnitude * x).norm() ? magnitude : -magnitude;
        // Subspace residual: on sign-symmetric spectra x settles in the
        // +/-magnitude eigenspace of B even when it is no eigenvector of B.
        if ((apply(bx) - magnitude * magnitude * x).norm() <= tol * std::max(1.0, magnitude)) break;
    }
    return {value, x};
}

}  // namespace

SpectralReport spectral(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("spectral: need n >= 2");

    SpectralReport report;
    int degree = 0;
    report.is_regular = regular_degree(g, &degree);

    if (n <= kDenseEigenLimit) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) a(v, w) = 1.0;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
        if (solver.info() != Eigen::Success) throw std::runtime_error("spectral: eigensolver failed");
        const auto& ev = solver.eigenvalues();
        report.eigenvalues.assign(ev.data(), ev.data() + n);
        report.lambda1 = ev[n - 1];
        report.lambda = std::max(std::abs(ev[n - 2]), std::abs(ev[0]));

        const Eigen::VectorXd v1 = solver.eigenvectors().col(n - 1);
        report.residual_lambda1 = (a * v1 - report.lambda1 * v1).norm() / v1.norm();
        const int lam_idx = std::abs(ev[n - 2]) >= std::abs(ev[0]) ? n - 2 : 0;
        const Eigen::VectorXd vl = solver.eigenvectors().col(lam_idx);
        report.residual_lambda = (a * vl - ev[lam_idx] * vl).norm() / vl.norm();
    } else {
        report.approximate = true;
        const double tol = 1e-8;
        Eigen::VectorXd v1;
        if (report.is_regular) {
            report.lambda1 = degree;
            v1 = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
        } else {
            auto [val, vec] = power_iterate(g, 0.0, Eigen::VectorXd(), tol, 20000);
            report.lambda1 = val;
            v1 = vec;
        }
        report.residual_lambda1 = (adj_times(g, v1) - report.lambda1 * v1).norm();
        auto [val2, vec2] = power_iterate(g, report.lambda1, v1, tol, 20000);
        report.lambda = std::abs(val2);
        report.residual_lambda =
            (adj_times(g, vec2) - report.lambda1 * v1.dot(vec2) * v1 - val2 * vec2).norm();
    }

    const double avg = 2.0 * static_cast<double>(g.edge_count()) / n;
    report.strong_expander_constant = avg > 0.0 ? report.lambda / std::sqrt(avg) : 0.0;
    if (report.is_regular && degree >= 1)
        report.ramanujan_pass = report.lambda <= 2.0 * std::sqrt(static_cast<double>(degree - 1)) + 1e-9;
    return report;
}

namespace {

int require_regular(const Graph& g) {
    int degree = 0;
    if (!regular_degree(g, &degree))
        throw std::invalid_argument("check requires a regular graph");
    return degree;
}

std::vector<int> random_subset(int n, int size, SplitMix64& rng, std::vector<int>& perm) {
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = 0; i < size; ++i) {
        const int j = i + rng.below_int(n - i);
        std::swap(perm[i], perm[j]);
    }
    return {perm.begin(), perm.begin() + size};
}

}  // namespace

MixingReport mixing_check(const Graph& g, double lambda, int pair_samples, std::uint64_t seed) {
    const int d = require_regular(g);
    const int n = g.n();
    MixingReport report;
    report.pairs = pair_samples;
    report.max_violation = -std::numeric_limits<double>::infinity();

    SplitMix64 rng(derive(seed, streams::pair_sampler));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<char> in_b(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < pair_samples; ++s) {
        const int size_a = 1 + rng.below_int(n);
        const int size_b = 1 + rng.below_int(n);
        const auto a = random_subset(n, size_a, rng, perm);
        const auto b = random_subset(n, size_b, rng, perm);
        std::fill(in_b.begin(), in_b.end(), 0);
        for (int v : b) in_b[v] = 1;

        long long ordered_pairs = 0;  // (u, v) adjacent with u in A, v in B
        for (int u : a)
            for (int w : g.neighbors(u)) ordered_pairs += in_b[w];

        const double expected = static_cast<double>(d) * size_a * size_b / n;
        const double deviation = std::abs(static_cast<double>(ordered_pairs) - expected);
        const double bound = lambda * std::sqrt(static_cast<double>(size_a) * size_b);
        report.max_violation = std::max(report.max_violation, deviation - bound);
    }
    return report;
}

TannerReport tanner_check(const Graph& g, double lambda, int subset_samples, std::uint64_t seed) {
    const int d = require_regular(g);
    const int n = g.n();
    TannerReport report;
    report.samples = subset_samples;
    report.max_violation = -std::numeric_limits<double>::infinity();

    SplitMix64 rng(derive(seed, streams::pair_sampler, 1));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < subset_samples; ++s) {
        const int size = 1 + rng.below_int(n);
        const auto subset = random_subset(n, size, rng, perm);
        std::fill(seen.begin(), seen.end(), 0);
        int neighborhood = 0;
        for (int v : subset)
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++neighborhood;
                }
        const double dd = static_cast<double>(d) * d;
        const double bound = dd * size / (lambda * lambda + (dd - lambda * lambda) * size / n);
        report.max_violation = std::max(report.max_violation, bound - neighborhood);
    }
    return report;
}

std::string to_json(const SpectralReport& report) {
    std::ostringstream out;
    out.precision(15);
    out << "{\"lambda1\":" << report.lambda1 << ",\"lambda\":" << report.lambda
        << ",\"is_regular\":" << (report.is_regular ? "true" : "false") << ",\"ramanujan_pass\":";
    if (report.ramanujan_pass)
        out << (*report.ramanujan_pass ? "true" : "false");
    else
        out << "null";
    out << ",\"strong_expander_constant\":" << report.strong_expander_constant
        << ",\"approximate\":" << (report.approximate ? "true" : "false")
        << ",\"residual_lambda1\":" << report.residual_lambda1
        << ",\"residual_lambda\":" << report.residual_lambda << "}";
    return out.str();
}

}  // namespace rumor
