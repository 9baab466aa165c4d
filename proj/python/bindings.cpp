// Python bindings for the main operations: graph checks, spectra,
// synchronizability, and the two simulators.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clustersync/graph.hpp"
#include "clustersync/graph_io.hpp"
#include "clustersync/metrics.hpp"
#include "clustersync/pipeline.hpp"
#include "clustersync/simulator.hpp"
#include "clustersync/spectral.hpp"
#include "clustersync/synchronizability.hpp"

namespace py = pybind11;
using namespace clustersync;

namespace {

NodeDynamics make_lorenz(const std::vector<double>& b,
                         const std::vector<double>& gamma_diag) {
    return lorenz_dynamics(
        b, Eigen::Map<const Eigen::VectorXd>(gamma_diag.data(),
                                             static_cast<long>(gamma_diag.size())));
}

py::dict trace_dict(const MetricTrace& trace) {
    py::dict out;
    out["name"] = trace.name;
    out["times"] = trace.times;
    out["values"] = trace.values;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cluster synchronization toolkit core";

    py::class_<ClusteredGraph>(m, "ClusteredGraph")
        .def(py::init<>())
        .def_readwrite("vertex_count", &ClusteredGraph::vertex_count)
        .def_readwrite("edges", &ClusteredGraph::edges)
        .def_readwrite("clusters", &ClusteredGraph::clusters)
        .def("cluster_count", &ClusteredGraph::cluster_count)
        .def("__eq__", [](const ClusteredGraph& a, const ClusteredGraph& b) {
            return a == b;
        });

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("load_graph", &load_graph, py::arg("path"));
    m.def("serialize_graph", &serialize_graph, py::arg("graph"));
    m.def("save_graph", &save_graph, py::arg("graph"), py::arg("path"));

    m.def("validate", [](const ClusteredGraph& graph) {
        const auto report = validate(graph);
        return py::make_tuple(report.ok, report.violations);
    });
    m.def("neighbors_in_cluster", &neighbors_in_cluster, py::arg("graph"),
          py::arg("vertex"), py::arg("cluster_index"));
    m.def("inter_cluster_index_set", &inter_cluster_index_set, py::arg("graph"),
          py::arg("vertex"));
    m.def("check_common_inter_cluster", [](const ClusteredGraph& graph) {
        const auto report = check_common_inter_cluster(graph);
        py::list violations;
        for (const auto& v : report.violations)
            violations.append(py::make_tuple(v.cluster, v.vertex_a, v.vertex_b,
                                             v.differing_cluster));
        return py::make_tuple(report.ok, violations);
    });
    m.def("connected_components", &connected_components, py::arg("graph"));
    m.def("check_same_component", [](const ClusteredGraph& graph) {
        const auto report = check_same_component(graph);
        return py::make_tuple(report.all_ok, report.per_cluster);
    });
    m.def("classify_cluster", [](const ClusteredGraph& graph, int k) {
        return std::string(to_string(classify_cluster(graph, k)));
    });
    m.def("classify_clusters", [](const ClusteredGraph& graph) {
        std::vector<std::string> names;
        for (auto c : classify_clusters(graph)) names.emplace_back(to_string(c));
        return names;
    });
    m.def("check_coexistence", [](const ClusteredGraph& graph) {
        const auto report = check_coexistence(classify_clusters(graph), graph);
        return py::make_tuple(report.applicable, report.flagged_pairs);
    });

    m.def("build_normalized_laplacian", [](const ClusteredGraph& graph) {
        return build_normalized_laplacian(graph).entries;
    });
    m.def("normalized_weights", &normalized_weights, py::arg("graph"),
          py::arg("c"));
    m.def("build_general_laplacian",
          [](const ClusteredGraph& graph, const EdgeWeights& weights) {
              return build_general_laplacian(graph, weights).entries;
          });
    m.def("check_weighted_invariance",
          [](const ClusteredGraph& graph, const EdgeWeights& weights) {
              const auto report = check_weighted_invariance(graph, weights);
              py::list violations;
              for (const auto& v : report.violations)
                  violations.append(py::make_tuple(v.cluster, v.foreign_cluster,
                                                   v.vertex_a, v.vertex_b, v.sum_a,
                                                   v.sum_b));
              return py::make_tuple(report.ok, violations);
          });

    m.def("left_perron_vector", [](const ClusteredGraph& graph) {
        return left_perron_vector(graph, build_normalized_laplacian(graph));
    });
    m.def("transverse_basis",
          [](const ClusteredGraph& graph, const Eigen::VectorXd& d) {
              return transverse_basis(graph, d).basis;
          });
    m.def("check_cluster_sync_condition",
          [](const ClusteredGraph& graph, double c, double alpha,
             const Eigen::VectorXd& d) {
              return check_cluster_sync_condition(
                  build_normalized_laplacian(graph), c, alpha, d, graph);
          },
          py::arg("graph"), py::arg("c"), py::arg("alpha"), py::arg("d"));
    m.def("appendix_witness",
          [](const ClusteredGraph& graph, const Eigen::VectorXd& d) {
              const auto witness = appendix_witness(graph, d);
              return py::make_tuple(witness.u, witness.residual);
          });

    py::class_<SynchronizabilityResult>(m, "SynchronizabilityResult")
        .def_readonly("cs_fixed", &SynchronizabilityResult::cs_fixed)
        .def_readonly("cs_best", &SynchronizabilityResult::cs_best)
        .def_readonly("d_best", &SynchronizabilityResult::d_best)
        .def_readonly("alpha", &SynchronizabilityResult::alpha)
        .def_readonly("c_min", &SynchronizabilityResult::c_min);
    m.def("cs_fixed_d", [](const ClusteredGraph& graph) {
        const auto laplacian = build_normalized_laplacian(graph);
        const auto d = left_perron_vector(graph, laplacian);
        return cs_fixed_d(laplacian, transverse_basis(graph, d));
    });
    m.def("cs_optimize",
          [](const ClusteredGraph& graph, int budget, std::optional<double> alpha) {
              return cs_optimize(graph, build_normalized_laplacian(graph), budget,
                                 alpha);
          },
          py::arg("graph"), py::arg("budget") = 500,
          py::arg("alpha") = std::nullopt);
    m.def("coupling_threshold", &coupling_threshold, py::arg("alpha"),
          py::arg("cs"));

    m.def("estimate_alpha",
          [](const std::vector<double>& b, const std::vector<double>& gamma_diag,
             const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
             int sample_count, std::uint64_t seed, double delta) {
              const auto estimate = estimate_alpha(make_lorenz(b, gamma_diag),
                                                   Box{lo, hi}, sample_count, seed,
                                                   delta);
              py::dict out;
              out["alpha"] = estimate.alpha;
              out["alpha_raw"] = estimate.alpha_raw;
              out["delta"] = estimate.delta;
              return out;
          },
          py::arg("b"), py::arg("gamma_diag"), py::arg("lo"), py::arg("hi"),
          py::arg("sample_count") = 100000, py::arg("seed") = 1,
          py::arg("delta") = 0.1);

    py::class_<SimulationRun>(m, "SimulationRun")
        .def_readonly("times", &SimulationRun::times)
        .def_readonly("states", &SimulationRun::states)
        .def_readonly("weights", &SimulationRun::weights)
        .def_readonly("edge_order", &SimulationRun::edge_order)
        .def_readonly("adaptive", &SimulationRun::adaptive)
        .def_readonly("diverged_at", &SimulationRun::diverged_at)
        .def_property_readonly("completed", [](const SimulationRun& run) {
            return run.status == RunStatus::Completed;
        });

    m.def("simulate_fixed",
          [](const ClusteredGraph& graph, const std::vector<double>& b,
             const std::vector<double>& gamma_diag, double c,
             const Eigen::MatrixXd& x0, double T, double h, int sample_every) {
              CoupledSystem system{graph, make_lorenz(b, gamma_diag),
                                   FixedCoupling{c, build_normalized_laplacian(graph)}};
              return simulate_fixed(system, x0, T, h, sample_every);
          },
          py::arg("graph"), py::arg("b"), py::arg("gamma_diag"), py::arg("c"),
          py::arg("x0"), py::arg("T") = 100.0, py::arg("h") = 0.01,
          py::arg("sample_every") = 10);
    m.def("simulate_adaptive",
          [](const ClusteredGraph& graph, const std::vector<double>& b,
             const std::vector<double>& gamma_diag, double rho,
             const Eigen::MatrixXd& x0, const Eigen::VectorXd& w0, double T,
             double h, int sample_every) {
              const auto laplacian = build_normalized_laplacian(graph);
              AdaptiveCoupling coupling;
              coupling.rho = Eigen::VectorXd::Constant(
                  static_cast<long>(directed_edges(graph).size()), rho);
              coupling.d = left_perron_vector(graph, laplacian);
              CoupledSystem system{graph, make_lorenz(b, gamma_diag), coupling};
              return simulate_adaptive(system, x0, w0, T, h, sample_every);
          },
          py::arg("graph"), py::arg("b"), py::arg("gamma_diag"), py::arg("rho"),
          py::arg("x0"), py::arg("w0"), py::arg("T") = 100.0,
          py::arg("h") = 0.01, py::arg("sample_every") = 10);

    m.def("directed_edges", &directed_edges, py::arg("graph"));
    m.def("cluster_average", &cluster_average, py::arg("states"), py::arg("graph"),
          py::arg("d"));
    m.def("random_states", &random_states, py::arg("m"), py::arg("n"),
          py::arg("lo"), py::arg("hi"), py::arg("seed"));
    m.def("random_weights", &random_weights, py::arg("count"), py::arg("lo"),
          py::arg("hi"), py::arg("seed"));

    m.def("var_metric", &var_metric, py::arg("run"), py::arg("graph"),
          py::arg("t0") = 50.0, py::arg("t1") = 100.0);
    m.def("k_metric", [](const SimulationRun& run, const ClusteredGraph& graph) {
        return trace_dict(k_metric(run, graph));
    });
    m.def("dis_metric", [](const SimulationRun& run, const ClusteredGraph& graph) {
        return trace_dict(dis_metric(run, graph));
    });
    m.def("lyapunov_v",
          [](const SimulationRun& run, const ClusteredGraph& graph,
             const Eigen::VectorXd& d) {
              return trace_dict(lyapunov_traces(run, graph, d).v);
          });
    m.def("weight_convergence_report",
          [](const SimulationRun& run, const ClusteredGraph& graph) {
              const auto report = weight_convergence_report(run, graph);
              py::list edges;
              for (const auto& entry : report.edges) {
                  py::dict row;
                  row["edge"] = entry.edge;
                  row["intra"] = entry.intra;
                  row["oscillation"] = entry.oscillation;
                  row["final_weight"] = entry.final_weight;
                  row["converged"] = entry.converged;
                  edges.append(row);
              }
              return py::make_tuple(report.all_intra_converged, edges);
          });
}
