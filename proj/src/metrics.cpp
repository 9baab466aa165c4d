#include "clustersync/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace clustersync {

namespace {

Eigen::MatrixXd unweighted_means(const Eigen::MatrixXd& X, const ClusteredGraph& graph) {
    const int K = graph.cluster_count();
    Eigen::MatrixXd means = Eigen::MatrixXd::Zero(K, X.cols());
    for (int k = 0; k < K; ++k) {
        for (int v : graph.clusters[k]) means.row(k) += X.row(v - 1);
        means.row(k) /= static_cast<double>(graph.clusters[k].size());
    }
    return means;
}

double intra_cluster_variance(const Eigen::MatrixXd& X, const ClusteredGraph& graph) {
    const Eigen::MatrixXd means = unweighted_means(X, graph);
    double total = 0.0;
    for (int k = 0; k < graph.cluster_count(); ++k) {
        const auto& members = graph.clusters[k];
        if (members.size() < 2) continue;  // singletons contribute zero
        double sum = 0.0;
        for (int v : members) sum += (X.row(v - 1) - means.row(k)).squaredNorm();
        total += sum / static_cast<double>(members.size() - 1);
    }
    return total;
}

}  // namespace

MetricTrace k_metric(const SimulationRun& run, const ClusteredGraph& graph) {
    MetricTrace trace;
    trace.name = "K";
    trace.times = run.times;
    trace.values.reserve(run.states.size());
    for (const auto& X : run.states)
        trace.values.push_back(intra_cluster_variance(X, graph));
    return trace;
}

double var_metric(const SimulationRun& run, const ClusteredGraph& graph,
                  double t0, double t1) {
    if (run.times.empty() || run.times.front() > t0 || run.times.back() < t1)
        throw std::invalid_argument("averaging window is not covered by the run");
    double sum = 0.0;
    long count = 0;
    for (size_t s = 0; s < run.times.size(); ++s) {
        if (run.times[s] < t0 || run.times[s] > t1) continue;
        sum += intra_cluster_variance(run.states[s], graph);
        ++count;
    }
    return sum / static_cast<double>(count);
}

MetricTrace dis_metric(const SimulationRun& run, const ClusteredGraph& graph) {
    const int K = graph.cluster_count();
    if (K < 2)
        throw std::invalid_argument("dis metric needs at least two clusters");
    MetricTrace trace;
    trace.name = "dis";
    trace.times = run.times;
    trace.values.reserve(run.states.size());
    for (const auto& X : run.states) {
        const Eigen::MatrixXd means = unweighted_means(X, graph);
        double best = std::numeric_limits<double>::infinity();
        for (int a = 0; a < K; ++a)
            for (int b = a + 1; b < K; ++b)
                best = std::min(best, (means.row(a) - means.row(b)).squaredNorm());
        trace.values.push_back(best);
    }
    return trace;
}

LyapunovTraces lyapunov_traces(const SimulationRun& run, const ClusteredGraph& graph,
                               const Eigen::VectorXd& d,
                               const std::optional<ReferenceWeights>& reference) {
    if (d.size() != graph.vertex_count || d.minCoeff() <= 0.0)
        throw std::invalid_argument("d must be a positive vector of length m");
    if (reference && !run.adaptive)
        throw std::invalid_argument("Q trace requires an adaptive run");

    LyapunovTraces traces;
    traces.v.name = "V";
    traces.v.times = run.times;
    for (const auto& X : run.states) {
        const Eigen::MatrixXd avg = cluster_average(X, graph, d);
        double v = 0.0;
        for (int k = 0; k < graph.cluster_count(); ++k)
            for (int vertex : graph.clusters[k])
                v += 0.5 * d(vertex - 1) *
                     (X.row(vertex - 1) - avg.row(k)).squaredNorm();
        traces.v.values.push_back(v);
    }

    if (reference) {
        const int ne = static_cast<int>(run.edge_order.size());
        if (reference->weights.size() != ne || reference->rho.size() != ne)
            throw std::invalid_argument(
                "reference weights must align with the run's edge order");
        MetricTrace q;
        q.name = "Q";
        q.times = run.times;
        for (size_t s = 0; s < run.weights.size(); ++s) {
            double dev = 0.0;
            for (int e = 0; e < ne; ++e) {
                const double diff = run.weights[s](e) - reference->weights(e);
                dev += diff * diff / (2.0 * reference->rho(e));
            }
            q.values.push_back(traces.v.values[s] + dev);
        }
        traces.q = std::move(q);
    }
    return traces;
}

WeightConvergenceReport weight_convergence_report(const SimulationRun& run,
                                                  const ClusteredGraph& graph) {
    if (!run.adaptive || run.weights.empty())
        throw std::invalid_argument("weight convergence needs an adaptive run");
    WeightConvergenceReport report;
    const auto owner = graph.cluster_of();
    const size_t samples = run.weights.size();
    const size_t tail_start =
        samples - std::max<size_t>(1, static_cast<size_t>(
                                          std::ceil(report.tail_fraction * samples)));
    for (size_t e = 0; e < run.edge_order.size(); ++e) {
        EdgeConvergence entry;
        entry.edge = run.edge_order[e];
        entry.intra =
            owner[entry.edge.first - 1] == owner[entry.edge.second - 1];
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (size_t s = tail_start; s < samples; ++s) {
            lo = std::min(lo, run.weights[s](e));
            hi = std::max(hi, run.weights[s](e));
        }
        entry.oscillation = hi - lo;
        entry.final_weight = run.weights.back()(e);
        entry.converged = entry.oscillation <= report.tolerance;
        if (entry.intra && !entry.converged) report.all_intra_converged = false;
        report.edges.push_back(entry);
    }
    return report;
}

}  // namespace clustersync
