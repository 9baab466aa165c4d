#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "clustersync/dynamics.hpp"
#include "clustersync/graph.hpp"
#include "clustersync/laplacian.hpp"

namespace clustersync {

/// Directed edge list: each stored edge {a,b} yields (a,b) then (b,a), in
/// file order. Index alignment for weight vectors everywhere below.
/// (i,j) carries w_ij, the weight applied at vertex i for neighbor j.
std::vector<std::pair<int, int>> directed_edges(const ClusteredGraph& graph);

struct FixedCoupling {
    double c = 0.0;
    WeightedLaplacian laplacian;
};

struct AdaptiveCoupling {
    Eigen::VectorXd rho;  // per directed edge, all positive
    Eigen::VectorXd d;    // left Perron vector of the normalized Laplacian
};

struct CoupledSystem {
    ClusteredGraph graph;
    NodeDynamics dynamics;
    std::variant<FixedCoupling, AdaptiveCoupling> coupling;
};

enum class RunStatus { Completed, Diverged };

struct SimulationRun {
    std::vector<double> times;             // sampled instants, uniform spacing
    std::vector<Eigen::MatrixXd> states;   // one m x n matrix per sample
    std::vector<Eigen::VectorXd> weights;  // adaptive runs: per-sample weights
    std::vector<std::pair<int, int>> edge_order;  // directed edges for weights
    RunStatus status = RunStatus::Completed;
    double diverged_at = 0.0;
    bool adaptive = false;
    double step = 0.0;  // integration step h

    int sample_count() const { return static_cast<int>(times.size()); }
};

/// Integrates the fixed-weight coupled system
///   dx^i = f_k(x^i) + c sum_j l_ij Gamma x^j
/// with RK4 at step h over [0, T], recording every `sample_every` steps.
/// Truncates with Diverged status when any coordinate leaves [-1e6, 1e6]
/// or turns non-finite.
SimulationRun simulate_fixed(const CoupledSystem& system, const Eigen::MatrixXd& x0,
                             double T, double h, int sample_every = 10);

/// Co-integrates states and per-directed-edge weights:
///   dx^i   = f_k(x^i) + sum_j a_ij w_ij Gamma (x^j - x^i)
///   dw_ij  = rho_ij d_i (x^i - xbar_k)^T Gamma (x^i - x^j)
/// The d-weighted cluster average is recomputed inside every RK4 stage.
SimulationRun simulate_adaptive(const CoupledSystem& system,
                                const Eigen::MatrixXd& x0,
                                const Eigen::VectorXd& w0, double T, double h,
                                int sample_every = 10);

/// d-weighted cluster averages: K x n matrix of xbar_k.
Eigen::MatrixXd cluster_average(const Eigen::MatrixXd& states,
                                const ClusteredGraph& graph,
                                const Eigen::VectorXd& d);

/// Per-coordinate bounding box of all sampled states, widened by `pad_frac`
/// of the observed width on each side.
Box attractor_box(const SimulationRun& run, double pad_frac = 0.2);

/// Initial node states drawn uniformly per coordinate (stream 0 of seed).
Eigen::MatrixXd random_states(int m, int n, double lo, double hi, std::uint64_t seed);

/// Initial edge weights drawn uniformly (stream 1 of seed).
Eigen::VectorXd random_weights(int count, double lo, double hi, std::uint64_t seed);

}  // namespace clustersync
