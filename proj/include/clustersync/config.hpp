#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clustersync {

/// Simulation run configuration (JSON file). Flags may override fields.
struct RunConfig {
    std::string graph_path;
    std::string dynamics_type = "lorenz";
    std::vector<double> b = {28.0, 38.0, 58.0};  // per-cluster parameters
    std::vector<double> gamma_diag = {1.0, 1.0, 0.0};
    std::string mode = "fixed";  // "fixed" | "adaptive"
    std::optional<double> c;     // required in fixed mode
    double rho = 1.0;            // adaptive gain
    std::array<double, 2> x0_range = {-3.0, 3.0};
    std::array<double, 2> w0_range = {-5.0, 5.0};
    double T = 100.0;
    double h = 0.01;
    std::uint64_t seed = 1;
    int sample_every = 10;
    std::string out_dir;
};

/// Parses and validates a config; throws ParseError naming the bad field.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

std::string serialize_run_config(const RunConfig& config);

}  // namespace clustersync
