#pragma once

#include <Eigen/Core>

#include <map>
#include <utility>
#include <vector>

#include "clustersync/graph.hpp"

namespace clustersync {

/// Per-directed-pair edge weights: (i,j) -> w_ij, the weight applied at
/// vertex i for its neighbor j. A bi-directed edge {i,j} carries two
/// independent entries (i,j) and (j,i).
using EdgeWeights = std::map<std::pair<int, int>, double>;

struct WeightedLaplacian {
    enum class Kind { Normalized, General };

    Eigen::MatrixXd entries;  // m x m, zero row sums
    Kind kind = Kind::Normalized;

    int size() const { return static_cast<int>(entries.rows()); }
};

/// Row i carries 1/d_{i,k'} on each neighbor in cluster k' (own cluster
/// included) and the negated row sum on the diagonal. Generally asymmetric
/// even for bi-directed graphs.
WeightedLaplacian build_normalized_laplacian(const ClusteredGraph& graph);

/// Normalized per-directed-pair weights c/d_{i,k'} for every edge.
EdgeWeights normalized_weights(const ClusteredGraph& graph, double c);

/// General weighted Laplacian: g_ij = w_ij on edges, zero elsewhere,
/// diagonal = negated row sum. Weights may be asymmetric and negative.
/// Throws std::invalid_argument for a weight on a non-edge or a missing one.
WeightedLaplacian build_general_laplacian(const ClusteredGraph& graph,
                                          const EdgeWeights& weights);

struct WeightedInvarianceViolation {
    int cluster;          // k
    int foreign_cluster;  // k'
    int vertex_a;         // i
    int vertex_b;         // i'
    double sum_a;         // sum of w over N_{k'}(i)
    double sum_b;
};

struct WeightedInvarianceReport {
    bool ok = true;
    std::vector<WeightedInvarianceViolation> violations;
};

/// Invariance condition for general weights: the inter-cluster weight sum
/// toward each foreign cluster must be constant within every cluster
/// (tolerance 1e-10).
WeightedInvarianceReport check_weighted_invariance(const ClusteredGraph& graph,
                                                   const EdgeWeights& weights);

}  // namespace clustersync
