#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustersync/graph.hpp"
#include "clustersync/simulator.hpp"

namespace clustersync {

struct MetricTrace {
    std::string name;
    std::vector<double> times;
    std::vector<double> values;
};

/// Time average over [t0, t1] of the summed per-cluster state variance
/// (1/(#C_k - 1)) sum |x^i - xbar_k|^2 with unweighted cluster means.
/// Singleton clusters contribute zero. Throws std::invalid_argument when the
/// window is not covered by the run.
double var_metric(const SimulationRun& run, const ClusteredGraph& graph,
                  double t0 = 50.0, double t1 = 100.0);

/// Per sample, the minimum over cluster pairs of |xbar_i - xbar_j|^2.
/// Throws std::invalid_argument for a single cluster.
MetricTrace dis_metric(const SimulationRun& run, const ClusteredGraph& graph);

/// Instantaneous intra-cluster variance trace; var_metric equals its window
/// average.
MetricTrace k_metric(const SimulationRun& run, const ClusteredGraph& graph);

/// Reference weights used by the adaptive Lyapunov function: the deviation
/// term is sum (1/(2 rho_e)) (w_e - reference_e)^2 per directed edge.
struct ReferenceWeights {
    Eigen::VectorXd weights;  // aligned with the run's edge order
    Eigen::VectorXd rho;
};

struct LyapunovTraces {
    MetricTrace v;
    std::optional<MetricTrace> q;
};

/// V(t) = 1/2 sum_k sum_i d_i |x^i - xbar^k_d|^2 along the run. With
/// reference weights (adaptive runs only), also Q(t) = V(t) + the weight
/// deviation term. Throws std::invalid_argument when Q is requested on a
/// fixed run.
LyapunovTraces lyapunov_traces(const SimulationRun& run, const ClusteredGraph& graph,
                               const Eigen::VectorXd& d,
                               const std::optional<ReferenceWeights>& reference =
                                   std::nullopt);

struct EdgeConvergence {
    std::pair<int, int> edge;  // directed pair (i, j)
    bool intra = false;        // both endpoints in one cluster
    double oscillation = 0.0;  // sup - inf over the final 20% of the run
    double final_weight = 0.0;
    bool converged = false;    // oscillation <= 1e-4
};

struct WeightConvergenceReport {
    std::vector<EdgeConvergence> edges;
    bool all_intra_converged = true;
    double tail_fraction = 0.2;
    double tolerance = 1e-4;
};

/// Per-directed-edge convergence verdicts over the final 20% of an adaptive
/// run. Throws std::invalid_argument on fixed runs.
WeightConvergenceReport weight_convergence_report(const SimulationRun& run,
                                                  const ClusteredGraph& graph);

}  // namespace clustersync
