#include "rumor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rumor/rng.hpp"
#include "rumor/version.hpp"

namespace rumor {

double sparse_gnp_probability(int n) {
    const double ln_n = std::log(static_cast<double>(n));
    return (ln_n + 2.0 * std::log(ln_n)) / static_cast<double>(n);
}

int trial_thread_count(int trials) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("RUMORBENCH_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return std::max(1, std::min(hw, trials));
}

namespace {

void run_trials(int trials, const std::function<void(int)>& body) {
    const int threads = trial_thread_count(trials);
    if (threads == 1) {
        for (int i = 0; i < trials; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= trials) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

Graph sample_connected(const GraphSpec& spec, std::uint64_t base_seed, int trial, int attempts) {
    GraphSpec trial_spec = spec;
    for (int a = 0; a < attempts; ++a) {
        trial_spec.seed = derive(base_seed, streams::trial_graph, static_cast<std::uint64_t>(trial),
                                 static_cast<std::uint64_t>(a));
        Graph g = generate(trial_spec);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("experiment: regeneration attempts exhausted (persistent disconnection)");
}

int max_degree_of(const Graph& g) {
    int m = 0;
    for (int v = 0; v < g.n(); ++v) m = std::max(m, g.degree(v));
    return m;
}

void check_deterministic_bounds(const Graph& g, int start, const Trace& trace, int max_rounds,
                                int degree_cap_times_distance_bound) {
    const int n = g.n();
    const int universal = n >= 2 ? 2 * n - 3 : 0;
    const int bound = std::min(degree_cap_times_distance_bound, universal);
    if (trace.broadcast_time == Trace::kNever) {
        if (max_rounds >= bound)
            throw InvariantViolation("quasirandom run missed its deterministic finish bound");
        return;
    }
    if (trace.broadcast_time > bound)
        throw InvariantViolation("quasirandom broadcast exceeded its deterministic bound");
    (void)start;
}

}  // namespace

ComparisonReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (cfg.models.empty()) throw std::invalid_argument("experiment: no models");
    validate(cfg.graph_spec);
    if (cfg.list_strategy == ListStrategy::explicit_order)
        throw std::invalid_argument("experiment: explicit lists are per-run, not per-experiment");

    const int n = spec_vertex_count(cfg.graph_spec);
    if (cfg.fixed_start && (*cfg.fixed_start < 0 || *cfg.fixed_start >= n))
        throw std::invalid_argument("experiment: start vertex out of range");
    const int max_rounds = cfg.max_rounds > 0 ? cfg.max_rounds : default_bench_rounds(n);
    const bool resample = is_random_family(cfg.graph_spec.family) && cfg.resample_random_graphs;

    Graph shared;
    ListAssignment shared_lists;
    int shared_degree_cap = 0;
    std::vector<int> shared_ecc(resample ? 0 : static_cast<std::size_t>(n), -1);
    if (!resample) {
        if (is_random_family(cfg.graph_spec.family))
            shared = sample_connected(cfg.graph_spec, cfg.base_seed, 0, cfg.regen_attempts);
        else
            shared = generate(cfg.graph_spec);
        if (!is_connected(shared))
            throw std::invalid_argument("experiment: graph is disconnected; refusing to run");
        if (cfg.list_strategy == ListStrategy::natural)
            shared_lists = make_lists(shared, ListStrategy::natural);
        shared_degree_cap = max_degree_of(shared);
    }

    const auto model_count = cfg.models.size();
    std::vector<std::vector<int>> times(model_count, std::vector<int>(static_cast<std::size_t>(cfg.trials)));
    std::vector<std::vector<std::vector<int>>> counts(
        model_count, std::vector<std::vector<int>>(static_cast<std::size_t>(cfg.trials)));
    std::mutex ecc_mutex;

    run_trials(cfg.trials, [&](int trial) {
        const Graph* g = &shared;
        Graph local;
        if (resample) {
            local = sample_connected(cfg.graph_spec, cfg.base_seed, trial + 1, cfg.regen_attempts);
            g = &local;
        }
        const ListAssignment* lists = &shared_lists;
        ListAssignment local_lists;
        if (resample || cfg.list_strategy != ListStrategy::natural) {
            local_lists = make_lists(*g, cfg.list_strategy,
                                     derive(cfg.base_seed, streams::trial_lists,
                                            static_cast<std::uint64_t>(trial)));
            lists = &local_lists;
        }

        int start = 0;
        if (cfg.fixed_start) {
            start = *cfg.fixed_start;
        } else {
            SplitMix64 rng(derive(cfg.base_seed, streams::start_pick, static_cast<std::uint64_t>(trial)));
            start = rng.below_int(g->n());
        }

        int distance_bound = -1;  // degree_cap * ecc(start), computed on demand
        for (std::size_t m = 0; m < model_count; ++m) {
            RunConfig rc;
            rc.model = cfg.models[m];
            rc.start_vertex = start;
            rc.seed = derive(cfg.base_seed, streams::trial_run, static_cast<std::uint64_t>(m),
                             static_cast<std::uint64_t>(trial));
            rc.max_rounds = max_rounds;
            rc.loss_probability = cfg.loss_probability;
            Trace trace = simulate(*g, *lists, rc);

            if (rc.model != Model::fully_random && cfg.loss_probability == 0.0) {
                if (distance_bound < 0) {
                    if (resample) {
                        distance_bound = max_degree_of(*g) * eccentricity(*g, start);
                    } else {
                        std::lock_guard<std::mutex> lock(ecc_mutex);
                        if (shared_ecc[start] < 0) shared_ecc[start] = eccentricity(shared, start);
                        distance_bound = shared_degree_cap * shared_ecc[start];
                    }
                }
                check_deterministic_bounds(*g, start, trace, max_rounds, distance_bound);
            }
            times[m][trial] = trace.broadcast_time;
            counts[m][trial] = std::move(trace.informed_counts);
        }
    });

    ComparisonReport report;
    report.n = n;
    for (std::size_t m = 0; m < model_count; ++m)
        report.models.push_back(summarize(to_string(cfg.models[m]), times[m], counts[m], n));

    const TrialStats* fr = nullptr;
    const TrialStats* qr = nullptr;
    for (const auto& s : report.models) {
        if (s.model == "fully_random" && !fr) fr = &s;
        if ((s.model == "quasirandom" || s.model == "quasirandom_literal") && !qr) qr = &s;
    }
    if (fr && qr && qr->mean > 0.0) {
        report.speedup = fr->mean / qr->mean;
        const std::size_t len = std::max(fr->success_prob.size(), qr->success_prob.size());
        auto at = [](const std::vector<double>& v, std::size_t t) {
            if (v.empty()) return 0.0;
            return t < v.size() ? v[t] : v.back();
        };
        report.dominance.resize(len);
        for (std::size_t t = 0; t < len; ++t)
            report.dominance[t] = at(qr->success_prob, t) - at(fr->success_prob, t);
    }
    return report;
}

SweepReport scaling_sweep(const GraphSpec& base, const std::vector<int>& sizes,
                          const std::vector<Model>& models, int trials, std::uint64_t base_seed) {
    if (sizes.empty()) throw std::invalid_argument("sweep: no sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("sweep: sizes must be ascending");

    SweepReport report;
    std::vector<std::pair<std::string, std::vector<double>>> normalized;
    for (int size : sizes) {
        GraphSpec spec = base;
        switch (base.family) {
            case Family::hypercube: {
                if (size < 2 || (size & (size - 1)) != 0)
                    throw std::invalid_argument("sweep: hypercube sizes must be powers of two");
                int d = 0;
                while ((1 << d) < size) ++d;
                spec.d = d;
                break;
            }
            case Family::kary_tree:
                spec.depth = size;
                break;
            case Family::fixed_degree_sequence:
                throw std::invalid_argument("sweep: fixed_degree_sequence is not sweepable");
            default:
                spec.n = size;
                break;
        }
        if (base.family == Family::gnp && base.p == 0.0)
            spec.p = sparse_gnp_probability(spec.n);

        ExperimentConfig cfg;
        cfg.graph_spec = spec;
        cfg.models = models;
        cfg.trials = trials;
        cfg.base_seed = derive(base_seed, static_cast<std::uint64_t>(size));
        const ComparisonReport comparison = run_experiment(cfg);

        const double ln_n = std::log(static_cast<double>(comparison.n));
        for (const auto& s : comparison.models) {
            SweepRow row;
            row.n = comparison.n;
            row.model = s.model;
            row.mean = s.mean;
            row.p99 = s.p99;
            row.mean_over_log = s.mean / ln_n;
            report.rows.push_back(row);
            auto it = std::find_if(normalized.begin(), normalized.end(),
                                   [&](const auto& p) { return p.first == s.model; });
            if (it == normalized.end()) {
                normalized.push_back({s.model, {row.mean_over_log}});
            } else {
                it->second.push_back(row.mean_over_log);
            }
        }
    }
    for (const auto& [model, values] : normalized) {
        const double drift = values.front() > 0.0 ? values.back() / values.front() : 0.0;
        report.normalized_drift.emplace_back(model, drift);
    }
    return report;
}

TailReport tail_compare(const GraphSpec& gnp_spec, int trials, std::uint64_t base_seed) {
    if (gnp_spec.family != Family::gnp)
        throw std::invalid_argument("tail_compare: expects a gnp spec");
    GraphSpec spec = gnp_spec;
    if (spec.p == 0.0) spec.p = sparse_gnp_probability(spec.n);

    ExperimentConfig cfg;
    cfg.graph_spec = spec;
    cfg.models = {Model::fully_random, Model::quasirandom_rolling};
    cfg.trials = trials;
    cfg.base_seed = base_seed;
    const ComparisonReport comparison = run_experiment(cfg);

    TailReport report;
    report.fully_random = comparison.models[0];
    report.quasirandom = comparison.models[1];
    report.fully_random_tail_dominates = report.fully_random.p99 > report.quasirandom.p99;
    return report;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

void append_stats_json(std::ostringstream& out, const TrialStats& s) {
    out << "{\"model\":\"" << s.model << "\",\"count\":" << s.count << ",\"mean\":" << s.mean
        << ",\"stddev\":" << s.stddev << ",\"min\":" << s.min << ",\"max\":" << s.max
        << ",\"p50\":" << s.p50 << ",\"p90\":" << s.p90 << ",\"p99\":" << s.p99
        << ",\"timeout_count\":" << s.timeout_count << ",\"informed_curve\":[";
    for (std::size_t i = 0; i < s.informed_curve.size(); ++i) {
        if (i) out << ',';
        out << s.informed_curve[i];
    }
    out << "],\"success_prob\":[";
    for (std::size_t i = 0; i < s.success_prob.size(); ++i) {
        if (i) out << ',';
        out << s.success_prob[i];
    }
    out << "]}";
}

std::string csv_preamble(const std::string& config_echo) {
    std::ostringstream out;
    out << "# " << kToolName << " v" << kVersion << "\n# config: " << config_echo << '\n';
    return out.str();
}

}  // namespace

std::string comparison_to_csv(const ComparisonReport& report, const std::string& config_echo) {
    std::ostringstream out;
    out.precision(10);
    out << csv_preamble(config_echo);
    out << "n,model,trials,mean,stddev,p50,p90,p99,max,timeouts\n";
    for (const auto& s : report.models) {
        out << report.n << ',' << s.model << ',' << s.count << ',' << s.mean << ',' << s.stddev << ','
            << s.p50 << ',' << s.p90 << ',' << s.p99 << ',' << s.max << ',' << s.timeout_count << '\n';
    }
    return out.str();
}

std::string comparison_to_json(const ComparisonReport& report, const std::string& config_echo) {
    std::ostringstream out;
    out.precision(12);
    out << "{\"version\":\"" << kVersion << "\",\"config\":\"" << json_escape(config_echo)
        << "\",\"n\":" << report.n << ",\"models\":[";
    for (std::size_t i = 0; i < report.models.size(); ++i) {
        if (i) out << ',';
        append_stats_json(out, report.models[i]);
    }
    out << "],\"speedup\":" << report.speedup << ",\"dominance\":[";
    for (std::size_t i = 0; i < report.dominance.size(); ++i) {
        if (i) out << ',';
        out << report.dominance[i];
    }
    out << "]}";
    return out.str();
}

std::string curves_to_csv(const ComparisonReport& report, const std::string& config_echo) {
    std::ostringstream out;
    out.precision(10);
    out << csv_preamble(config_echo);
    out << "model,t,mean_informed\n";
    for (const auto& s : report.models)
        for (std::size_t t = 0; t < s.informed_curve.size(); ++t)
            out << s.model << ',' << t << ',' << s.informed_curve[t] << '\n';
    return out.str();
}

std::string sweep_to_csv(const SweepReport& report, const std::string& config_echo) {
    std::ostringstream out;
    out.precision(10);
    out << csv_preamble(config_echo);
    out << "n,model,mean,p99,mean_over_log\n";
    for (const auto& row : report.rows)
        out << row.n << ',' << row.model << ',' << row.mean << ',' << row.p99 << ','
            << row.mean_over_log << '\n';
    for (const auto& [model, drift] : report.normalized_drift)
        out << "# normalized_drift " << model << ' ' << drift << '\n';
    return out.str();
}

std::string sweep_to_json(const SweepReport& report, const std::string& config_echo) {
    std::ostringstream out;
    out.precision(12);
    out << "{\"version\":\"" << kVersion << "\",\"config\":\"" << json_escape(config_echo)
        << "\",\"rows\":[";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        if (i) out << ',';
        out << "{\"n\":" << row.n << ",\"model\":\"" << row.model << "\",\"mean\":" << row.mean
            << ",\"p99\":" << row.p99 << ",\"mean_over_log\":" << row.mean_over_log << '}';
    }
    out << "],\"normalized_drift\":{";
    for (std::size_t i = 0; i < report.normalized_drift.size(); ++i) {
        if (i) out << ',';
        out << '"' << report.normalized_drift[i].first << "\":" << report.normalized_drift[i].second;
    }
    out << "}}";
    return out.str();
}

}  // namespace rumor
