#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clustersync/graph.hpp"

namespace clustersync {

/// Right-hand side of one node's uncoupled ODE.
using VectorField =
    std::function<void(const Eigen::VectorXd& state, Eigen::VectorXd& deriv)>;

/// Lorenz-family field with cluster parameter b:
///   du1 = 10 (u2 - u1)
///   du2 = (8/3) u1 - u2 - u1 u3
///   du3 = u1 u2 - b u3
void eval_lorenz(double b, const Eigen::VectorXd& u, Eigen::VectorXd& out);

VectorField lorenz_field(double b);

using FieldFactory = std::function<VectorField(const std::vector<double>& params)>;

/// Field registry keyed by type name; "lorenz" (params = {b}) is built in.
void register_field_type(const std::string& name, FieldFactory factory);

/// Throws std::invalid_argument for an unknown type name.
VectorField make_field(const std::string& name, const std::vector<double>& params);

/// Per-cluster node dynamics plus the inner coupling matrix.
struct NodeDynamics {
    int dimension = 3;
    std::vector<VectorField> fields;  // one per cluster
    Eigen::MatrixXd gamma;            // n x n, symmetric nonnegative definite
};

/// Lorenz family with per-cluster b values and diagonal inner coupling.
NodeDynamics lorenz_dynamics(const std::vector<double>& b_values,
                             const Eigen::VectorXd& gamma_diag);

/// Gamma must be symmetric (1e-12) with eigenvalues >= -1e-12; exactly one
/// field per cluster of `cluster_count`.
ValidationReport validate_dynamics(const NodeDynamics& dynamics, int cluster_count);

/// Axis-aligned box region in state space.
struct Box {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    int dimension() const { return static_cast<int>(lo.size()); }
    /// Widen every side by `frac` of the current width.
    Box padded(double frac) const;
};

/// Default bounding region for the Lorenz family: [-60, 60]^3.
Box default_lorenz_box();

struct DecreasingEstimate {
    double alpha = 0.0;      // estimate with the 10% safety margin applied
    double alpha_raw = 0.0;  // smallest feasible value on the sample
    double delta = 0.1;
    Box region;
};

/// Estimates the smallest alpha such that, for every cluster field f and all
/// sampled pairs (xi, zeta) in the region,
///   (xi-zeta)^T [f(xi) - f(zeta) - alpha Gamma (xi-zeta)] <= -delta |xi-zeta|^2.
/// Samples quasi-uniform pairs plus pairs concentrated at small separations,
/// then applies a 10% safety margin. Deterministic given the seed.
/// Throws std::runtime_error when a Gamma-null direction makes the quotient
/// unbounded in the region.
DecreasingEstimate estimate_alpha(const NodeDynamics& dynamics, const Box& region,
                                  int sample_count, std::uint64_t seed,
                                  double delta = 0.1);

/// Counts violations of the decreasing condition with the given alpha on a
/// fresh sample; used to validate estimates.
int count_decreasing_violations(const NodeDynamics& dynamics, const Box& region,
                                double alpha, double delta, int sample_count,
                                std::uint64_t seed);

/// Derivative of the full flattened system state.
using DerivFn = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// One classical fourth-order Runge-Kutta step.
/// Throws std::runtime_error when the derivative produces non-finite values.
Eigen::VectorXd rk4_step(const DerivFn& field, const Eigen::VectorXd& x, double h);

}  // namespace clustersync
