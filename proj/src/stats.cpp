#include "rumor/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rumor/engine.hpp"

namespace rumor {

int quantile_nearest_rank(const std::vector<int>& sorted, double q) {
    if (sorted.empty()) return 0;
    const auto rank = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::min(sorted.size() - 1, std::max<std::size_t>(rank, 1) - 1)];
}

TrialStats summarize(const std::string& model, const std::vector<int>& times,
                     const std::vector<std::vector<int>>& counts, int n) {
    TrialStats s;
    s.model = model;
    s.count = static_cast<int>(times.size());

    std::vector<int> finished;
    finished.reserve(times.size());
    for (int t : times) {
        if (t == Trace::kNever)
            ++s.timeout_count;
        else
            finished.push_back(t);
    }
    std::sort(finished.begin(), finished.end());
    if (!finished.empty()) {
        double sum = 0.0, sq = 0.0;
        for (int t : finished) {
            sum += t;
            sq += static_cast<double>(t) * t;
        }
        const double m = sum / static_cast<double>(finished.size());
        s.mean = m;
        s.stddev = std::sqrt(std::max(0.0, sq / static_cast<double>(finished.size()) - m * m));
        s.min = finished.front();
        s.max = finished.back();
        s.p50 = quantile_nearest_rank(finished, 0.50);
        s.p90 = quantile_nearest_rank(finished, 0.90);
        s.p99 = quantile_nearest_rank(finished, 0.99);
    }

    std::size_t horizon = 0;
    for (const auto& c : counts) horizon = std::max(horizon, c.size());
    s.informed_curve.assign(horizon, 0.0);
    for (const auto& c : counts) {
        for (std::size_t t = 0; t < horizon; ++t)
            s.informed_curve[t] += static_cast<double>(t < c.size() ? c[t] : c.back());
    }
    if (!counts.empty())
        for (auto& v : s.informed_curve) v /= static_cast<double>(counts.size());
    (void)n;

    s.success_prob.assign(horizon, 0.0);
    for (int t : times) {
        if (t == Trace::kNever) continue;
        for (std::size_t r = static_cast<std::size_t>(t); r < horizon; ++r) s.success_prob[r] += 1.0;
    }
    if (!times.empty())
        for (auto& v : s.success_prob) v /= static_cast<double>(times.size());
    return s;
}

namespace {

// Regularized incomplete gamma by series / continued fraction
// (Numerical Recipes style).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double chi_square_pvalue(double stat, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_pvalue: dof must be >= 1");
    return gamma_q(dof / 2.0, stat / 2.0);
}

double chi_square_uniform_stat(const std::vector<int>& counts) {
    if (counts.empty()) throw std::invalid_argument("chi_square_uniform_stat: empty counts");
    long long total = 0;
    for (int c : counts) total += c;
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    if (expected <= 0.0) throw std::invalid_argument("chi_square_uniform_stat: no samples");
    double stat = 0.0;
    for (int c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

}  // namespace rumor
