#include "clustersync/pipeline.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace clustersync {

SyncReport build_structural_report(const std::string& path,
                                   const ClusteredGraph& graph) {
    SyncReport report;
    report.graph_path = path;
    report.vertex_count = graph.vertex_count;
    report.cluster_count = graph.cluster_count();

    const auto validation = validate(graph);
    report.valid = validation.ok;
    report.validation_violations = validation.violations;
    if (!validation.ok) return report;

    report.common_inter_cluster = check_common_inter_cluster(graph).ok;
    const auto same = check_same_component(graph);
    report.same_component = same.all_ok;
    report.same_component_per_cluster = same.per_cluster;

    const auto classes = classify_clusters(graph);
    for (auto c : classes) report.cluster_classes.push_back(to_string(c));
    const auto coexistence = check_coexistence(classes, graph);
    report.coexistence_applicable = coexistence.applicable;
    for (const auto& [a, b] : coexistence.flagged_pairs)
        report.coexistence_flags.emplace_back(a + 1, b + 1);
    return report;
}

ThresholdEstimate estimate_coupling_threshold(const ClusteredGraph& graph,
                                              const NodeDynamics& dynamics,
                                              const WeightedLaplacian& laplacian,
                                              double cs_best, std::uint64_t seed,
                                              double T, double h,
                                              int sample_count) {
    if (!(cs_best > 0.0))
        throw std::domain_error(
            "coupling threshold needs cs > 0 (not synchronizable otherwise)");

    Box box;
    if (dynamics.dimension == 3)
        box = default_lorenz_box();
    else {
        box.lo = Eigen::VectorXd::Constant(dynamics.dimension, -60.0);
        box.hi = Eigen::VectorXd::Constant(dynamics.dimension, 60.0);
    }
    const auto coarse = estimate_alpha(dynamics, box, sample_count, seed);

    // Preliminary run: the coarse threshold capped at the RK4 stability edge
    // (h c |lambda| safely below 2.785 on the real axis).
    Eigen::EigenSolver<Eigen::MatrixXd> eig(laplacian.entries);
    const double spectral_extent = eig.eigenvalues().cwiseAbs().maxCoeff();
    const double c_stable = 2.5 / (h * std::max(spectral_extent, 1e-12));
    const double c_probe =
        std::min(1.05 * coupling_threshold(coarse.alpha, cs_best), c_stable);

    CoupledSystem system{graph, dynamics, FixedCoupling{c_probe, laplacian}};
    const Eigen::MatrixXd x0 =
        random_states(graph.vertex_count, dynamics.dimension, -3.0, 3.0, seed);
    const auto probe = simulate_fixed(system, x0, T, h, 10);
    if (probe.status != RunStatus::Completed)
        throw std::runtime_error("preliminary run diverged; cannot refine the "
                                 "bounding region");

    ThresholdEstimate result;
    result.c_probe = c_probe;
    result.estimate =
        estimate_alpha(dynamics, attractor_box(probe, 0.2), sample_count, seed);
    result.c_min = coupling_threshold(result.estimate.alpha, cs_best);
    return result;
}

}  // namespace clustersync
