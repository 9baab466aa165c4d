#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "clustersync/metrics.hpp"
#include "clustersync/simulator.hpp"

namespace clustersync {

/// Decimal text with 17 significant digits: doubles round-trip losslessly.
std::string format_double(double value);

/// State trajectory: header t,x1_1,...,x1_n,x2_1,... (1-based node ids).
void write_states_csv(const std::string& path, const SimulationRun& run);

/// Adaptive weight history: header t plus one "i-j" column per directed edge.
void write_weights_csv(const std::string& path, const SimulationRun& run);

void write_trace_csv(const std::string& path, const MetricTrace& trace);

/// Row-major full-precision matrix dump (no header).
void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& matrix);

/// Arbitrary table with a header row.
void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace clustersync
