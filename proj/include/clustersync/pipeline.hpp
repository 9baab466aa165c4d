#pragma once

#include <cstdint>
#include <string>

#include "clustersync/dynamics.hpp"
#include "clustersync/graph.hpp"
#include "clustersync/laplacian.hpp"
#include "clustersync/report.hpp"
#include "clustersync/simulator.hpp"
#include "clustersync/synchronizability.hpp"

namespace clustersync {

/// Structural verdict sheet for a graph: validation, coupling condition,
/// connectivity, classification, coexistence.
SyncReport build_structural_report(const std::string& path,
                                   const ClusteredGraph& graph);

struct ThresholdEstimate {
    DecreasingEstimate estimate;  // on the refined region
    double c_probe = 0.0;         // coupling used for the preliminary run
    double c_min = 0.0;           // estimate.alpha / cs_best
};

/// Coupling threshold for a fixture-style system:
/// 1. estimate alpha on the default box,
/// 2. run a preliminary simulation at a coupling that is RK4-stable,
/// 3. re-estimate alpha on the observed attractor extent widened by 20%,
/// 4. c_min = alpha / cs_best.
ThresholdEstimate estimate_coupling_threshold(const ClusteredGraph& graph,
                                              const NodeDynamics& dynamics,
                                              const WeightedLaplacian& laplacian,
                                              double cs_best, std::uint64_t seed,
                                              double T = 100.0, double h = 0.01,
                                              int sample_count = 200000);

}  // namespace clustersync
