// Command-line front end: graph generation, single simulations, multi-trial
// benchmarks, scaling sweeps, expansion/spectral audits and reach-set
// queries, all driven by one --seed.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rumor/bench.hpp"
#include "rumor/engine.hpp"
#include "rumor/expansion.hpp"
#include "rumor/generators.hpp"
#include "rumor/graph.hpp"
#include "rumor/lists.hpp"
#include "rumor/spectral.hpp"
#include "rumor/rng.hpp"
#include "rumor/version.hpp"

namespace {

struct GraphOptions {
    std::string family = "complete";
    int n = 0;
    int d = 0;
    double p = 0.0;
    int k = 0;
    int depth = 0;
    std::vector<std::string> degrees;
    std::string graph_file;
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ',';
        out += p;
    }
    return out;
}

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    cmd->add_option("--family", opts.family,
                    "complete|hypercube|gnp|random_regular|fixed_degree_sequence|kary_tree|path|two_clique_hub");
    cmd->add_option("--n", opts.n, "vertex count");
    cmd->add_option("--d", opts.d, "hypercube dimension / regular degree");
    cmd->add_option("--p", opts.p, "gnp edge probability (0 = sparse regime)");
    cmd->add_option("--k", opts.k, "tree arity");
    cmd->add_option("--depth", opts.depth, "tree depth");
    cmd->add_option("--degrees", opts.degrees, "comma-separated degree sequence")->delimiter(',');
    cmd->add_option("--graph-file", opts.graph_file, "edge-list file instead of a generator");
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

rumor::GraphSpec spec_from_options(const GraphOptions& opts, std::uint64_t seed,
                                   bool validate_now = true) {
    rumor::GraphSpec spec;
    spec.family = rumor::family_from_string(opts.family);
    spec.n = opts.n;
    spec.d = opts.d;
    spec.p = opts.p;
    spec.k = opts.k;
    spec.depth = opts.depth;
    if (!opts.degrees.empty()) spec.degrees = parse_int_list(join(opts.degrees));
    spec.seed = seed;
    if (validate_now) {
        if (spec.family == rumor::Family::gnp && spec.p == 0.0)
            spec.p = rumor::sparse_gnp_probability(spec.n);
        rumor::validate(spec);
    }
    return spec;
}

rumor::Graph load_or_generate(const GraphOptions& opts, std::uint64_t seed) {
    if (!opts.graph_file.empty()) {
        std::ifstream in(opts.graph_file);
        if (!in) throw std::invalid_argument("cannot open graph file: " + opts.graph_file);
        return rumor::read_edge_list(in);
    }
    return rumor::generate(spec_from_options(opts, seed));
}

std::string graph_echo(const GraphOptions& opts) {
    std::ostringstream out;
    if (!opts.graph_file.empty()) {
        out << "graph-file=" << opts.graph_file;
        return out.str();
    }
    out << "family=" << opts.family;
    if (opts.n) out << " n=" << opts.n;
    if (opts.d) out << " d=" << opts.d;
    if (opts.p > 0.0) out << " p=" << opts.p;
    if (opts.k) out << " k=" << opts.k;
    if (opts.depth) out << " depth=" << opts.depth;
    if (!opts.degrees.empty()) out << " degrees=" << join(opts.degrees);
    return out.str();
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << payload;
}

std::vector<rumor::Model> parse_models(const std::string& csv) {
    std::vector<rumor::Model> models;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) models.push_back(rumor::model_from_string(item));
    }
    if (models.empty()) throw std::invalid_argument("no models given");
    return models;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(rumor::kToolName) + " " + std::string(rumor::kVersion) +
                 " - randomized and quasirandom push broadcast workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "root seed; all randomness derives from it")->capture_default_str();

    // gen
    GraphOptions gen_graph;
    std::string gen_out;
    bool gen_metrics = false;
    auto* gen = app.add_subcommand("gen", "generate a graph and write its edge list");
    add_graph_options(gen, gen_graph);
    gen->add_option("--out", gen_out, "edge-list output path")->required();
    gen->add_flag("--metrics", gen_metrics, "also print degree/diameter metrics");

    // simulate
    GraphOptions sim_graph;
    std::string sim_model = "quasirandom";
    std::string sim_lists = "natural";
    int sim_start = 0;
    int sim_max_rounds = 0;
    bool sim_adversarial = false;
    double sim_loss = 0.0;
    std::string sim_trace_out, sim_lists_out;
    auto* sim = app.add_subcommand("simulate", "run one broadcast and print its broadcast_time");
    add_graph_options(sim, sim_graph);
    sim->add_option("--model", sim_model, "fully_random|quasirandom|quasirandom_literal");
    sim->add_option("--lists", sim_lists, "natural|random");
    sim->add_option("--start", sim_start, "start vertex");
    sim->add_option("--max-rounds", sim_max_rounds, "round cap (0 = auto)");
    sim->add_flag("--adversarial", sim_adversarial,
                  "worst-case schedule for path / two_clique_hub families");
    sim->add_option("--loss", sim_loss, "per-call loss probability");
    sim->add_option("--trace-out", sim_trace_out, "write the call trace as JSON lines");
    sim->add_option("--lists-out", sim_lists_out, "write the list assignment as JSON");

    // bench
    GraphOptions bench_graph;
    std::vector<std::string> bench_models{"fully_random", "quasirandom"};
    std::string bench_lists = "natural";
    std::string bench_format = "json";
    std::string bench_out, bench_curves_out;
    int bench_trials = 100;
    int bench_start = -1;
    int bench_max_rounds = 0;
    bool bench_fixed_sample = false;
    auto* bench = app.add_subcommand("bench", "multi-trial broadcast-time statistics");
    add_graph_options(bench, bench_graph);
    bench->add_option("--models", bench_models, "comma-separated model list")->delimiter(',');
    bench->add_option("--trials", bench_trials, "trials per model");
    bench->add_option("--start", bench_start, "fixed start vertex (-1 = uniform per trial)");
    bench->add_option("--lists", bench_lists, "natural|random");
    bench->add_option("--max-rounds", bench_max_rounds, "round cap (0 = auto)");
    bench->add_flag("--fixed-sample", bench_fixed_sample,
                    "sample random families once instead of per trial");
    bench->add_option("--format", bench_format, "json|csv");
    bench->add_option("--out", bench_out, "report output path");
    bench->add_option("--curves-out", bench_curves_out, "informed-count curves CSV path");

    // sweep
    GraphOptions sweep_graph;
    std::vector<std::string> sweep_models{"fully_random", "quasirandom"};
    std::vector<std::string> sweep_sizes;
    std::string sweep_format = "csv";
    std::string sweep_out;
    int sweep_trials = 100;
    auto* sweep = app.add_subcommand("sweep", "scaling table across sizes");
    add_graph_options(sweep, sweep_graph);
    sweep->add_option("--sizes", sweep_sizes, "ascending sizes (kary_tree: depths)")
        ->delimiter(',')
        ->required();
    sweep->add_option("--models", sweep_models, "comma-separated model list")->delimiter(',');
    sweep->add_option("--trials", sweep_trials, "trials per size and model");
    sweep->add_option("--format", sweep_format, "json|csv");
    sweep->add_option("--out", sweep_out, "report output path");

    // audit
    GraphOptions audit_graph;
    std::string audit_mode = "sampled";
    std::string audit_out;
    int audit_samples = 2000;
    int audit_p2_samples = 10;
    rumor::ExpansionParams audit_params;
    auto* audit = app.add_subcommand("audit", "vertex/edge-expansion and degree-regularity audit");
    add_graph_options(audit, audit_graph);
    audit->add_option("--mode", audit_mode, "exact|sampled");
    audit->add_option("--samples", audit_samples, "random connected subsets to grow");
    audit->add_option("--p2-samples", audit_p2_samples, "subsets per size on the geometric grid");
    audit->add_option("--c-alpha", audit_params.c_alpha, "subset-size cap multiplier");
    audit->add_option("--c-beta", audit_params.c_beta_threshold, "vertex-expansion pass bar");
    audit->add_option("--c-delta", audit_params.c_delta, "edge-expansion neighbor fraction");
    audit->add_option("--c-omega", audit_params.c_omega, "deficient-vertex budget multiplier");
    audit->add_option("--p3-max-ratio", audit_params.p3_max_ratio, "max/avg degree cap");
    audit->add_option("--p3-min-ratio", audit_params.p3_min_ratio, "min/avg degree floor");
    audit->add_option("--out", audit_out, "JSON output path");

    // spectral
    GraphOptions spectral_graph;
    std::string spectral_out;
    int mixing_pairs = 0;
    int tanner_samples = 0;
    auto* spec_cmd = app.add_subcommand("spectral", "adjacency extremal eigenvalues and checks");
    add_graph_options(spec_cmd, spectral_graph);
    spec_cmd->add_option("--mixing-pairs", mixing_pairs, "also run the edge-deviation check");
    spec_cmd->add_option("--tanner-samples", tanner_samples, "also run the neighborhood bound check");
    spec_cmd->add_option("--out", spectral_out, "JSON output path");

    // reach
    GraphOptions reach_graph;
    std::string reach_lists = "natural";
    int reach_w = 0, reach_a = 1, reach_b = 1;
    auto* reach = app.add_subcommand("reach", "vertices that relay to w within rounds [a, b]");
    add_graph_options(reach, reach_graph);
    reach->add_option("--w", reach_w, "target vertex")->required();
    reach->add_option("--a", reach_a, "window start (>= 1)")->required();
    reach->add_option("--b", reach_b, "window end")->required();
    reach->add_option("--lists", reach_lists, "natural|random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (*gen) {
            const auto graph = load_or_generate(gen_graph, seed);
            std::ofstream out(gen_out);
            if (!out) throw std::runtime_error("cannot write output file: " + gen_out);
            rumor::write_edge_list(graph, out);
            std::cout << "wrote " << gen_out << ": n=" << graph.n() << " m=" << graph.edge_count()
                      << '\n';
            if (gen_metrics) {
                const auto m = rumor::metrics(graph);
                std::cout << "min_degree " << m.min_degree << "\navg_degree " << m.avg_degree
                          << "\nmax_degree " << m.max_degree << "\ndiameter "
                          << (m.connected ? std::to_string(m.diameter) : std::string("inf"))
                          << "\nconnected " << (m.connected ? "true" : "false") << '\n';
            }
        } else if (*sim) {
            rumor::RunConfig rc;
            rc.model = rumor::model_from_string(sim_model);
            rc.seed = seed;
            rc.loss_probability = sim_loss;

            rumor::Graph graph;
            rumor::ListAssignment lists;
            std::optional<rumor::Offsets> offsets;
            if (sim_adversarial) {
                const auto family = rumor::family_from_string(sim_graph.family);
                if (family == rumor::Family::path) {
                    auto sched = rumor::adversarial_path_schedule(sim_graph.n);
                    graph = std::move(sched.graph);
                    lists = std::move(sched.lists);
                    offsets = std::move(sched.offsets);
                    rc.start_vertex = sched.start;
                } else if (family == rumor::Family::two_clique_hub) {
                    auto sched = rumor::adversarial_two_clique_schedule(sim_graph.n);
                    graph = std::move(sched.graph);
                    lists = std::move(sched.lists);
                    rc.start_vertex = sched.start;
                } else {
                    throw std::invalid_argument("--adversarial supports path and two_clique_hub");
                }
                rc.max_rounds = sim_max_rounds > 0 ? sim_max_rounds
                                                   : rumor::default_adversarial_rounds(graph.n());
            } else {
                graph = load_or_generate(sim_graph, seed);
                lists = rumor::make_lists(graph, rumor::list_strategy_from_string(sim_lists),
                                          rumor::derive(seed, rumor::streams::list_shuffle));
                rc.start_vertex = sim_start;
                rc.max_rounds =
                    sim_max_rounds > 0 ? sim_max_rounds : rumor::default_bench_rounds(graph.n());
            }
            rc.record_trace = !sim_trace_out.empty();

            const auto trace = offsets ? rumor::simulate(graph, lists, rc, *offsets)
                                       : rumor::simulate(graph, lists, rc);

            // Deterministic finish bounds; a breach is an engine bug.
            if (rc.model != rumor::Model::fully_random && rc.loss_probability == 0.0 &&
                rumor::is_connected(graph)) {
                const auto m = rumor::metrics(graph);
                const int bound = std::min(m.max_degree * m.diameter, 2 * graph.n() - 3);
                const bool finished = trace.broadcast_time != rumor::Trace::kNever;
                if ((finished && trace.broadcast_time > bound) && graph.n() >= 2)
                    throw rumor::InvariantViolation("broadcast exceeded deterministic bound");
                if (!finished && rc.max_rounds >= bound)
                    throw rumor::InvariantViolation("broadcast missed deterministic finish bound");
            }

            if (trace.broadcast_time == rumor::Trace::kNever)
                std::cout << "broadcast_time inf\n";
            else
                std::cout << "broadcast_time " << trace.broadcast_time << '\n';
            std::cout << "rounds_run " << trace.rounds_run << "\ninformed "
                      << trace.informed_counts.back() << "/" << graph.n() << '\n';

            if (!sim_trace_out.empty()) {
                std::ofstream out(sim_trace_out);
                if (!out) throw std::runtime_error("cannot write trace file: " + sim_trace_out);
                rumor::write_trace_jsonl(trace, rc, graph.n(), out);
            }
            if (!sim_lists_out.empty()) {
                std::ofstream out(sim_lists_out);
                if (!out) throw std::runtime_error("cannot write lists file: " + sim_lists_out);
                rumor::write_lists_json(lists, out);
            }
        } else if (*bench) {
            rumor::ExperimentConfig cfg;
            cfg.graph_spec = spec_from_options(bench_graph, seed);
            cfg.models = parse_models(join(bench_models));
            cfg.trials = bench_trials;
            if (bench_start >= 0) cfg.fixed_start = bench_start;
            cfg.list_strategy = rumor::list_strategy_from_string(bench_lists);
            cfg.base_seed = seed;
            cfg.max_rounds = bench_max_rounds;
            cfg.resample_random_graphs = !bench_fixed_sample;

            const auto report = rumor::run_experiment(cfg);

            std::ostringstream echo;
            echo << "bench " << graph_echo(bench_graph) << " models=" << join(bench_models)
                 << " trials=" << bench_trials << " lists=" << bench_lists << " seed=" << seed;
            for (const auto& s : report.models) {
                std::cout << s.model << ": mean " << s.mean << ", p99 " << s.p99 << ", max " << s.max
                          << ", timeouts " << s.timeout_count << '\n';
            }
            if (report.speedup > 0.0) std::cout << "speedup " << report.speedup << '\n';

            const std::string payload = bench_format == "csv"
                                            ? rumor::comparison_to_csv(report, echo.str())
                                            : rumor::comparison_to_json(report, echo.str());
            write_output(payload, bench_out);
            if (!bench_curves_out.empty())
                write_output(rumor::curves_to_csv(report, echo.str()), bench_curves_out);
        } else if (*sweep) {
            const auto sizes = parse_int_list(join(sweep_sizes));
            rumor::GraphSpec base =
                spec_from_options(sweep_graph, seed, false);  // sizes land per step
            const auto report = rumor::scaling_sweep(base, sizes, parse_models(join(sweep_models)),
                                                     sweep_trials, seed);

            std::ostringstream echo;
            echo << "sweep " << graph_echo(sweep_graph) << " sizes=" << join(sweep_sizes)
                 << " models=" << join(sweep_models) << " trials=" << sweep_trials
                 << " seed=" << seed;
            for (const auto& row : report.rows)
                std::cout << "n " << row.n << ' ' << row.model << ": mean " << row.mean << ", p99 "
                          << row.p99 << ", mean/ln n " << row.mean_over_log << '\n';
            for (const auto& [model, drift] : report.normalized_drift)
                std::cout << "normalized drift " << model << ": " << drift << '\n';

            const std::string payload = sweep_format == "json"
                                            ? rumor::sweep_to_json(report, echo.str())
                                            : rumor::sweep_to_csv(report, echo.str());
            write_output(payload, sweep_out);
        } else if (*audit) {
            const auto graph = load_or_generate(audit_graph, seed);
            const auto mode =
                audit_mode == "exact" ? rumor::AuditMode::exact : rumor::AuditMode::sampled;
            const auto report =
                rumor::audit_all(graph, audit_params, mode, audit_samples, audit_p2_samples, seed);
            std::cout << "p1 " << (report.p1.pass ? "pass" : "fail") << " (min ratio "
                      << report.p1.min_observed_ratio << ")\n";
            std::cout << "p2 " << (report.p2.pass ? "pass" : "fail") << " (max excess "
                      << report.p2.max_deficient_excess << ")\n";
            std::cout << "p3 " << (report.p3.pass ? "pass" : "fail") << " (max/avg "
                      << report.p3.max_ratio << ", min/avg " << report.p3.delta_ratio << ")\n";
            std::ostringstream echo;
            echo << "audit " << graph_echo(audit_graph) << " mode=" << audit_mode
                 << " samples=" << audit_samples << " seed=" << seed;
            const std::string payload = "{\"version\":\"" + std::string(rumor::kVersion) +
                                        "\",\"config\":\"" + echo.str() +
                                        "\",\"report\":" + rumor::to_json(report) + "}";
            write_output(payload + "\n", audit_out);
            if (audit_out.empty()) std::cout << payload << '\n';
        } else if (*spec_cmd) {
            const auto graph = load_or_generate(spectral_graph, seed);
            const auto report = rumor::spectral(graph);
            std::cout << "lambda1 " << report.lambda1 << "\nlambda " << report.lambda << '\n';
            if (report.ramanujan_pass)
                std::cout << "ramanujan " << (*report.ramanujan_pass ? "pass" : "fail") << '\n';
            std::ostringstream echo;
            echo << "spectral " << graph_echo(spectral_graph) << " seed=" << seed;
            std::string payload = "{\"version\":\"" + std::string(rumor::kVersion) +
                                  "\",\"config\":\"" + echo.str() +
                                  "\",\"report\":" + rumor::to_json(report);
            payload += "}";
            if (mixing_pairs > 0) {
                const auto mix = rumor::mixing_check(graph, report.lambda, mixing_pairs, seed);
                std::cout << "mixing max violation " << mix.max_violation << '\n';
                payload.pop_back();
                payload += ",\"mixing_max_violation\":" + std::to_string(mix.max_violation) + "}";
            }
            if (tanner_samples > 0) {
                const auto tan = rumor::tanner_check(graph, report.lambda, tanner_samples, seed);
                std::cout << "tanner max violation " << tan.max_violation << '\n';
                payload.pop_back();
                payload += ",\"tanner_max_violation\":" + std::to_string(tan.max_violation) + "}";
            }
            write_output(payload + "\n", spectral_out);
            if (spectral_out.empty()) std::cout << payload << '\n';
        } else if (*reach) {
            const auto graph = load_or_generate(reach_graph, seed);
            const auto lists = rumor::make_lists(
                graph, rumor::list_strategy_from_string(reach_lists),
                rumor::derive(seed, rumor::streams::list_shuffle));
            const auto offsets = rumor::draw_offsets(graph, rumor::derive(seed, rumor::streams::offsets));
            const auto result = rumor::reach_set(graph, lists, offsets, reach_w, reach_a, reach_b);
            std::cout << '[';
            for (std::size_t i = 0; i < result.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << result[i];
            }
            std::cout << "]\n";
        }
    } catch (const rumor::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
