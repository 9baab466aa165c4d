#include "clustersync/synchronizability.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace clustersync {

double cs_fixed_d(const WeightedLaplacian& laplacian, const TransverseBasis& basis) {
    if (basis.dimension() == 0)
        throw std::domain_error(
            "cluster synchronizability is undefined when every cluster is a "
            "singleton (empty transverse space)");
    const Eigen::MatrixXd DL = basis.d.asDiagonal() * laplacian.entries;
    const Eigen::MatrixXd A =
        -0.5 * basis.basis.transpose() * (DL + DL.transpose()) * basis.basis;
    const Eigen::MatrixXd B =
        basis.basis.transpose() * basis.d.asDiagonal() * basis.basis;
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> eig(A, B);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("generalized eigen decomposition failed");
    return eig.eigenvalues()(0);
}

SynchronizabilityResult cs_optimize(const ClusteredGraph& graph,
                                    const WeightedLaplacian& laplacian,
                                    int budget,
                                    std::optional<double> alpha) {
    const int m = graph.vertex_count;
    Eigen::VectorXd d = left_perron_vector(graph, laplacian);

    auto evaluate = [&](const Eigen::VectorXd& diag) {
        return cs_fixed_d(laplacian, transverse_basis(graph, diag));
    };

    SynchronizabilityResult result;
    result.cs_fixed = evaluate(d);
    result.cs_best = result.cs_fixed;
    result.d_best = d;
    int evals = 1;

    double step = 2.0;
    while (step > 1.01 && evals < budget) {
        bool improved = false;
        for (int i = 0; i < m && evals < budget; ++i) {
            for (double factor : {step, 1.0 / step}) {
                if (evals >= budget) break;
                Eigen::VectorXd cand = result.d_best;
                cand(i) *= factor;
                cand *= static_cast<double>(m) / cand.sum();
                const double value = evaluate(cand);
                ++evals;
                if (value > result.cs_best + 1e-12) {
                    result.cs_best = value;
                    result.d_best = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step = std::sqrt(step);
    }

    result.alpha = alpha;
    if (alpha && result.cs_best > 0.0)
        result.c_min = *alpha / result.cs_best;
    return result;
}

double coupling_threshold(double alpha, double cs) {
    if (cs <= 0.0)
        throw std::domain_error(
            "not synchronizable by the sufficient condition: cs <= 0");
    return alpha / cs;
}

}  // namespace clustersync
