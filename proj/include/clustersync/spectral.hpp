#pragma once

#include <Eigen/Core>

#include "clustersync/graph.hpp"
#include "clustersync/laplacian.hpp"

namespace clustersync {

/// Positive left null vector of the weighted Laplacian, computed per
/// connected component and scaled so each component's entries sum to its
/// size (hence sum over all vertices = m). Residual |d^T L| <= 1e-10.
/// Throws std::runtime_error if the null space is degenerate or not
/// sign-definite.
Eigen::VectorXd left_perron_vector(const ClusteredGraph& graph,
                                   const WeightedLaplacian& laplacian);

/// Orthonormal basis of the transverse space: vectors whose d-weighted sum
/// vanishes inside every cluster. basis has m rows and m-K columns.
struct TransverseBasis {
    Eigen::VectorXd d;
    Eigen::MatrixXd basis;

    int dimension() const { return static_cast<int>(basis.cols()); }
};

TransverseBasis transverse_basis(const ClusteredGraph& graph,
                                 const Eigen::VectorXd& d);

enum class Definiteness { NegativeDefinite, NegativeSemidefinite, Indefinite };

const char* to_string(Definiteness v);

struct DefinitenessResult {
    Definiteness verdict = Definiteness::NegativeDefinite;
    double lambda_max = 0.0;  // largest eigenvalue of the projected symmetric part
};

/// Verdict on the symmetric part of M restricted to the transverse space:
/// lambda_max < -tol negative definite, |lambda_max| <= tol boundary,
/// lambda_max > tol indefinite. An empty basis (m == K) is vacuously
/// negative definite with lambda_max = -inf.
DefinitenessResult check_restricted_definiteness(const Eigen::MatrixXd& M,
                                                 const TransverseBasis& basis,
                                                 double tol = 1e-9);

/// Stability condition for coupling strength c and contraction offset alpha:
/// [D(cL + alpha I)]^s restricted to the transverse space must be
/// non-positive definite.
bool check_cluster_sync_condition(const WeightedLaplacian& laplacian, double c,
                                  double alpha, const Eigen::VectorXd& d,
                                  const ClusteredGraph& graph, double tol = 1e-9);

/// Nonzero transverse vector u with u^T D L u = 0, certifying that the
/// restricted form cannot be negative definite. Exists whenever some
/// cluster spans two or more connected components.
struct TransverseWitness {
    Eigen::VectorXd u;  // unit norm
    double residual;    // |u^T D L u|
};

/// Constructs the witness for a cluster spanning >= 2 components, either by
/// the two-level construction (cluster isolated from all others) or by the
/// reduced cluster-level null-vector construction. Throws
/// std::invalid_argument when no cluster spans multiple components.
TransverseWitness appendix_witness(const ClusteredGraph& graph,
                                   const Eigen::VectorXd& d);

}  // namespace clustersync
