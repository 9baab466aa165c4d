// clustersync command line: structural checks, synchronizability spectra,
// fixed and adaptive simulations, coupling sweeps.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "clustersync/config.hpp"
#include "clustersync/csv.hpp"
#include "clustersync/graph_io.hpp"
#include "clustersync/metrics.hpp"
#include "clustersync/pipeline.hpp"
#include "clustersync/report.hpp"
#include "clustersync/svg.hpp"

namespace fs = std::filesystem;
using namespace clustersync;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConditionFailed = 1;
constexpr int kExitUsage = 2;

std::string default_out_dir() {
    const char* env = std::getenv("CLUSTERSYNC_OUT");
    return env && *env ? env : ".";
}

fs::path ensure_out_dir(const std::string& dir) {
    fs::path path(dir.empty() ? default_out_dir() : dir);
    fs::create_directories(path);
    return path;
}

void write_report(const SyncReport& report, const fs::path& out) {
    std::ofstream file(out / "report.json");
    file << to_json_string(report);
    std::cout << to_text(report);
}

NodeDynamics dynamics_from_config(const RunConfig& config, int cluster_count) {
    if (static_cast<int>(config.b.size()) != cluster_count)
        throw ParseError("field 'dynamics.b': expected one value per cluster (" +
                         std::to_string(cluster_count) + ")");
    const Eigen::VectorXd gamma_diag = Eigen::Map<const Eigen::VectorXd>(
        config.gamma_diag.data(), static_cast<long>(config.gamma_diag.size()));
    if (config.dynamics_type == "lorenz")
        return lorenz_dynamics(config.b, gamma_diag);
    NodeDynamics dynamics;
    dynamics.dimension = static_cast<int>(config.gamma_diag.size());
    for (double param : config.b)
        dynamics.fields.push_back(make_field(config.dynamics_type, {param}));
    dynamics.gamma = gamma_diag.asDiagonal();
    return dynamics;
}

void emit_common_artifacts(const SimulationRun& run, const ClusteredGraph& graph,
                           const fs::path& out) {
    write_states_csv((out / "states.csv").string(), run);
    if (run.states.empty()) return;
    const auto k_trace = k_metric(run, graph);
    write_trace_csv((out / "k.csv").string(), k_trace);
    PlotOptions k_opts;
    k_opts.title = "intra-cluster variance K(t)";
    k_opts.y_label = "K";
    k_opts.log_y = true;
    write_svg_lineplot((out / "k.svg").string(), {to_series(k_trace)}, k_opts);
    if (graph.cluster_count() >= 2) {
        const auto dis_trace = dis_metric(run, graph);
        write_trace_csv((out / "dis.csv").string(), dis_trace);
        PlotOptions dis_opts;
        dis_opts.title = "minimum inter-cluster separation dis(t)";
        dis_opts.y_label = "dis";
        write_svg_lineplot((out / "dis.svg").string(), {to_series(dis_trace)},
                           dis_opts);
    }
}

RunSummary summarize_run(const SimulationRun& run, const ClusteredGraph& graph,
                         const RunConfig& config) {
    RunSummary summary;
    summary.mode = config.mode;
    summary.seed = config.seed;
    summary.c = config.c.value_or(0.0);
    summary.rho = config.rho;
    summary.status =
        run.status == RunStatus::Completed ? "completed" : "diverged";
    summary.diverged_at = run.diverged_at;
    if (run.status == RunStatus::Completed && !run.states.empty()) {
        summary.final_k = k_metric(run, graph).values.back();
        if (run.times.back() >= 100.0) summary.var = var_metric(run, graph);
        if (graph.cluster_count() >= 2) {
            const auto dis_trace = dis_metric(run, graph);
            double lo = std::numeric_limits<double>::infinity();
            const double t0 = std::min(50.0, run.times.back() / 2);
            for (size_t s = 0; s < dis_trace.times.size(); ++s)
                if (dis_trace.times[s] >= t0)
                    lo = std::min(lo, dis_trace.values[s]);
            summary.min_dis = lo;
        }
    }
    return summary;
}

int cmd_check(const std::string& graph_path, const std::string& out_dir) {
    const auto graph = load_graph(graph_path);
    const auto report = build_structural_report(graph_path, graph);
    write_report(report, ensure_out_dir(out_dir));
    if (!report.valid) {
        std::cerr << "error: invalid graph\n";
        return kExitUsage;
    }
    return report.structural_ok() ? kExitOk : kExitConditionFailed;
}

int cmd_spectrum(const std::string& graph_path, std::optional<double> alpha,
                 bool estimate, int budget, std::uint64_t seed,
                 const std::string& out_dir, bool emit_matrices) {
    const auto graph = load_graph(graph_path);
    auto report = build_structural_report(graph_path, graph);
    const auto out = ensure_out_dir(out_dir);
    if (!report.valid) {
        write_report(report, out);
        return kExitUsage;
    }
    if (!report.structural_ok())
        std::cerr << "warning: structural conditions are not satisfied; the "
                     "spectrum may certify nothing\n";

    const auto laplacian = build_normalized_laplacian(graph);
    const auto result = cs_optimize(graph, laplacian, budget);
    report.cs_fixed = result.cs_fixed;
    report.cs_best = result.cs_best;
    report.d_best.assign(result.d_best.data(),
                         result.d_best.data() + result.d_best.size());

    if (estimate && !alpha) {
        std::vector<double> b(graph.cluster_count(), 28.0);
        if (graph.cluster_count() == 3) b = {28.0, 38.0, 58.0};
        const auto threshold = estimate_coupling_threshold(
            graph, lorenz_dynamics(b, Eigen::Vector3d(1, 1, 0)), laplacian,
            result.cs_best, seed);
        alpha = threshold.estimate.alpha;
    }
    if (alpha) {
        report.alpha = *alpha;
        report.c_min = coupling_threshold(*alpha, result.cs_best);
    }

    write_report(report, out);
    {
        std::ofstream csv(out / "cs.csv");
        csv << "graph,cs_fixed,cs_best,alpha,c_min\n";
        csv << graph_path << "," << format_double(result.cs_fixed) << ","
            << format_double(result.cs_best) << ","
            << format_double(report.alpha.value_or(std::nan(""))) << ","
            << format_double(report.c_min.value_or(std::nan(""))) << "\n";
    }
    if (emit_matrices) {
        write_matrix_csv((out / "laplacian.csv").string(), laplacian.entries);
        const auto basis =
            transverse_basis(graph, left_perron_vector(graph, laplacian));
        write_matrix_csv((out / "transverse_basis.csv").string(), basis.basis);
    }
    return kExitOk;
}

int cmd_simulate(RunConfig config, const std::string& out_dir) {
    const auto graph = load_graph(config.graph_path);
    auto report = build_structural_report(config.graph_path, graph);
    const auto out = ensure_out_dir(!out_dir.empty() ? out_dir : config.out_dir);
    if (!report.valid) {
        write_report(report, out);
        return kExitUsage;
    }
    const auto dynamics = dynamics_from_config(config, graph.cluster_count());
    const auto laplacian = build_normalized_laplacian(graph);
    CoupledSystem system{graph, dynamics, FixedCoupling{*config.c, laplacian}};
    const auto x0 = random_states(graph.vertex_count, dynamics.dimension,
                                  config.x0_range[0], config.x0_range[1],
                                  config.seed);
    const auto run =
        simulate_fixed(system, x0, config.T, config.h, config.sample_every);

    emit_common_artifacts(run, graph, out);
    if (run.status == RunStatus::Completed) {
        const auto d = left_perron_vector(graph, laplacian);
        const auto traces = lyapunov_traces(run, graph, d);
        write_trace_csv((out / "v.csv").string(), traces.v);
        PlotOptions v_opts;
        v_opts.title = "Lyapunov V(t)";
        v_opts.y_label = "V";
        v_opts.log_y = true;
        write_svg_lineplot((out / "v.svg").string(), {to_series(traces.v)},
                           v_opts);
    }
    report.runs.push_back(summarize_run(run, graph, config));
    write_report(report, out);
    if (run.status != RunStatus::Completed) {
        std::cerr << "error: run diverged at t = " << run.diverged_at << "\n";
        return kExitConditionFailed;
    }
    return kExitOk;
}

int cmd_adapt(RunConfig config, const std::string& out_dir, bool force) {
    const auto graph = load_graph(config.graph_path);
    auto report = build_structural_report(config.graph_path, graph);
    const auto out = ensure_out_dir(!out_dir.empty() ? out_dir : config.out_dir);
    if (!report.valid) {
        write_report(report, out);
        return kExitUsage;
    }
    if (!report.structural_ok()) {
        if (!force) {
            write_report(report, out);
            std::cerr << "error: adaptive runs need the common inter-cluster "
                         "coupling condition and clusters confined to one "
                         "component; use --force to proceed anyway\n";
            return kExitConditionFailed;
        }
        std::cerr << "warning: structural conditions violated; proceeding "
                     "(--force)\n";
    }

    const auto dynamics = dynamics_from_config(config, graph.cluster_count());
    const auto laplacian = build_normalized_laplacian(graph);
    const auto d = left_perron_vector(graph, laplacian);
    const auto edges = directed_edges(graph);
    AdaptiveCoupling coupling;
    coupling.rho =
        Eigen::VectorXd::Constant(static_cast<long>(edges.size()), config.rho);
    coupling.d = d;
    CoupledSystem system{graph, dynamics, coupling};
    const auto x0 = random_states(graph.vertex_count, dynamics.dimension,
                                  config.x0_range[0], config.x0_range[1],
                                  config.seed);
    const auto w0 = random_weights(static_cast<int>(edges.size()),
                                   config.w0_range[0], config.w0_range[1],
                                   config.seed);
    const auto run = simulate_adaptive(system, x0, w0, config.T, config.h,
                                       config.sample_every);

    emit_common_artifacts(run, graph, out);
    if (!run.weights.empty()) {
        write_weights_csv((out / "weights.csv").string(), run);
        std::vector<PlotSeries> weight_series;
        for (size_t e = 0; e < run.edge_order.size(); ++e) {
            PlotSeries series;
            series.x = run.times;
            for (const auto& w : run.weights) series.y.push_back(w(e));
            weight_series.push_back(std::move(series));
        }
        PlotOptions w_opts;
        w_opts.title = "adaptive weights";
        w_opts.y_label = "w";
        write_svg_lineplot((out / "weights.svg").string(), weight_series, w_opts);
    }

    auto summary = summarize_run(run, graph, config);
    if (run.status == RunStatus::Completed) {
        const auto convergence = weight_convergence_report(run, graph);
        summary.intra_weights_converged = convergence.all_intra_converged;
    }
    report.runs.push_back(summary);
    write_report(report, out);
    if (run.status != RunStatus::Completed) {
        std::cerr << "error: run diverged at t = " << run.diverged_at << "\n";
        return kExitConditionFailed;
    }
    return kExitOk;
}

int cmd_sweep(RunConfig config, std::vector<double> c_values,
              const std::string& out_dir) {
    if (c_values.empty()) {
        std::cerr << "error: sweep needs at least one c value\n";
        return kExitUsage;
    }
    std::sort(c_values.begin(), c_values.end());
    const auto last = std::unique(c_values.begin(), c_values.end());
    if (last != c_values.end()) {
        std::cerr << "warning: duplicate c values removed\n";
        c_values.erase(last, c_values.end());
    }

    const auto graph = load_graph(config.graph_path);
    auto report = build_structural_report(config.graph_path, graph);
    const auto out = ensure_out_dir(!out_dir.empty() ? out_dir : config.out_dir);
    if (!report.valid) {
        write_report(report, out);
        return kExitUsage;
    }
    const auto dynamics = dynamics_from_config(config, graph.cluster_count());
    const auto laplacian = build_normalized_laplacian(graph);
    const auto x0 = random_states(graph.vertex_count, dynamics.dimension,
                                  config.x0_range[0], config.x0_range[1],
                                  config.seed);

    std::vector<std::vector<double>> rows;
    PlotSeries series;
    series.label = "var";
    for (double c : c_values) {
        CoupledSystem system{graph, dynamics, FixedCoupling{c, laplacian}};
        const auto run =
            simulate_fixed(system, x0, config.T, config.h, config.sample_every);
        RunConfig row_config = config;
        row_config.c = c;
        report.runs.push_back(summarize_run(run, graph, row_config));
        double var = std::nan("");
        if (run.status == RunStatus::Completed && run.times.back() >= 100.0)
            var = var_metric(run, graph);
        rows.push_back({c, var});
        if (std::isfinite(var) && var > 0) {
            series.x.push_back(c);
            series.y.push_back(var);
        }
    }
    write_table_csv((out / "var_vs_c.csv").string(), {"c", "var"}, rows);
    PlotOptions opts;
    opts.title = "var with respect to c";
    opts.x_label = "c";
    opts.y_label = "var";
    opts.log_y = true;
    write_svg_lineplot((out / "var_vs_c.svg").string(), {series}, opts);
    write_report(report, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster synchronization toolkit"};
    app.require_subcommand(1);

    std::string graph_path, config_path, out_dir;
    std::uint64_t seed_flag = 0;
    bool seed_given = false;

    auto* check = app.add_subcommand("check", "structural condition checks");
    check->add_option("graph", graph_path, "graph file")->required();
    check->add_option("--out", out_dir, "output directory");

    auto* spectrum =
        app.add_subcommand("spectrum", "cluster synchronizability quotient");
    double alpha_flag = 0.0;
    bool alpha_given = false, estimate_alpha_flag = false, emit_matrices = false;
    int budget = 500;
    spectrum->add_option("graph", graph_path, "graph file")->required();
    spectrum->add_option("--alpha", alpha_flag, "decreasing-condition offset")
        ->each([&](const std::string&) { alpha_given = true; });
    spectrum->add_flag("--estimate-alpha", estimate_alpha_flag,
                       "estimate alpha from a preliminary run");
    spectrum->add_option("--budget", budget, "optimizer evaluation budget");
    spectrum->add_flag("--emit-matrices", emit_matrices,
                       "write Laplacian and transverse basis CSVs");
    spectrum->add_option("--out", out_dir, "output directory");
    spectrum->add_option("--seed", seed_flag, "seed for the preliminary run")
        ->each([&](const std::string&) { seed_given = true; });

    auto* simulate = app.add_subcommand("simulate", "fixed-weight run");
    double c_flag = 0.0, t_flag = 0.0, h_flag = 0.0;
    bool c_given = false, t_given = false, h_given = false;
    simulate->add_option("--config", config_path, "run config file")->required();
    simulate->add_option("--c", c_flag, "coupling strength override")
        ->each([&](const std::string&) { c_given = true; });
    simulate->add_option("--T", t_flag, "time horizon override")
        ->each([&](const std::string&) { t_given = true; });
    simulate->add_option("--step", h_flag, "step-size override")
        ->each([&](const std::string&) { h_given = true; });
    simulate->add_option("--seed", seed_flag, "seed override")
        ->each([&](const std::string&) { seed_given = true; });
    simulate->add_option("--out", out_dir, "output directory");

    auto* adapt = app.add_subcommand("adapt", "adaptive-weight run");
    double rho_flag = 0.0;
    bool rho_given = false, force = false;
    adapt->add_option("--config", config_path, "run config file")->required();
    adapt->add_option("--rho", rho_flag, "adaptive gain override")
        ->each([&](const std::string&) { rho_given = true; });
    adapt->add_option("--seed", seed_flag, "seed override")
        ->each([&](const std::string&) { seed_given = true; });
    adapt->add_flag("--force", force, "proceed despite structural violations");
    adapt->add_option("--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "var as a function of c");
    std::vector<double> c_values;
    sweep->add_option("--config", config_path, "run config file")->required();
    sweep->add_option("--c-values", c_values, "coupling strengths")
        ->required()
        ->delimiter(',');
    sweep->add_option("--seed", seed_flag, "seed override")
        ->each([&](const std::string&) { seed_given = true; });
    sweep->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(graph_path, out_dir);
        if (spectrum->parsed())
            return cmd_spectrum(
                graph_path,
                alpha_given ? std::optional<double>(alpha_flag) : std::nullopt,
                estimate_alpha_flag, budget, seed_given ? seed_flag : 1, out_dir,
                emit_matrices);

        RunConfig config = load_run_config(config_path);
        if (seed_given) config.seed = seed_flag;
        if (simulate->parsed()) {
            if (c_given) config.c = c_flag;
            if (t_given) config.T = t_flag;
            if (h_given) config.h = h_flag;
            if (!(config.T > 0) || !(config.h > 0)) {
                std::cerr << "error: T and h must be positive\n";
                return kExitUsage;
            }
            if (!config.c) {
                std::cerr << "error: fixed runs need c\n";
                return kExitUsage;
            }
            return cmd_simulate(config, out_dir);
        }
        if (adapt->parsed()) {
            if (rho_given) {
                if (!(rho_flag > 0)) {
                    std::cerr << "error: rho must be positive\n";
                    return kExitUsage;
                }
                config.rho = rho_flag;
            }
            return cmd_adapt(config, out_dir, force);
        }
        if (sweep->parsed()) return cmd_sweep(config, c_values, out_dir);
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitConditionFailed;
    }
    return kExitUsage;
}
