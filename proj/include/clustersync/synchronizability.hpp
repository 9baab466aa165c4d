#pragma once

#include <Eigen/Core>

#include <optional>

#include "clustersync/graph.hpp"
#include "clustersync/laplacian.hpp"
#include "clustersync/spectral.hpp"

namespace clustersync {

/// Cluster synchronizability quotient for one fixed diagonal scaling:
/// min over transverse u of -u^T (DL)^s u / u^T D u, the smallest
/// eigenvalue of the projected generalized pencil.
/// Throws std::domain_error when the transverse space is empty (m == K).
double cs_fixed_d(const WeightedLaplacian& laplacian, const TransverseBasis& basis);

struct SynchronizabilityResult {
    double cs_fixed = 0.0;           // quotient at the Perron diagonal
    double cs_best = 0.0;            // best value found (a lower bound on CS)
    Eigen::VectorXd d_best;          // optimizing diagonal, trace m
    std::optional<double> alpha;     // decreasing-condition offset, if supplied
    std::optional<double> c_min;     // alpha / cs_best when alpha given and cs_best > 0
};

/// Maximizes cs_fixed_d over positive diagonals by coordinate ascent on the
/// entries (multiplicative steps, factor 2 shrinking to 1.01), starting from
/// the left Perron vector and keeping trace(D) = m. Deterministic given the
/// evaluation budget. The result is a lower bound on the true quotient.
SynchronizabilityResult cs_optimize(const ClusteredGraph& graph,
                                    const WeightedLaplacian& laplacian,
                                    int budget = 500,
                                    std::optional<double> alpha = std::nullopt);

/// Sufficient coupling strength c_min = alpha / cs.
/// Throws std::domain_error when cs <= 0 (the sufficient condition cannot
/// certify synchronization at any coupling strength).
double coupling_threshold(double alpha, double cs);

}  // namespace clustersync
