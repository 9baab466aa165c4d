#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clustersync {

/// Condensed outcome of one simulation run.
struct RunSummary {
    std::string mode;  // "fixed" | "adaptive"
    std::uint64_t seed = 0;
    double c = 0.0;    // fixed runs
    double rho = 0.0;  // adaptive runs
    std::string status = "completed";
    double diverged_at = 0.0;
    std::optional<double> var;
    std::optional<double> final_k;
    std::optional<double> min_dis;
    std::optional<bool> intra_weights_converged;
};

/// End-to-end verdict sheet. Cluster numbers are 1-based here, matching all
/// file I/O; serialization round-trips losslessly.
struct SyncReport {
    std::string graph_path;
    int vertex_count = 0;
    int cluster_count = 0;

    bool valid = true;
    std::vector<std::string> validation_violations;

    bool common_inter_cluster = false;
    bool same_component = false;
    std::vector<bool> same_component_per_cluster;
    std::vector<std::string> cluster_classes;
    bool coexistence_applicable = false;
    std::vector<std::pair<int, int>> coexistence_flags;  // 1-based cluster pairs

    std::optional<double> cs_fixed;
    std::optional<double> cs_best;
    std::optional<double> alpha;
    std::optional<double> c_min;
    std::vector<double> d_best;

    std::vector<RunSummary> runs;

    bool structural_ok() const { return common_inter_cluster && same_component; }
};

std::string to_json_string(const SyncReport& report);
SyncReport report_from_json(const std::string& text);

/// Human-readable rendering for the terminal.
std::string to_text(const SyncReport& report);

}  // namespace clustersync
