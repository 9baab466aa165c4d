#include "clustersync/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace clustersync {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    return out;
}

}  // namespace

void write_states_csv(const std::string& path, const SimulationRun& run) {
    auto out = open_out(path);
    const int m = run.states.empty() ? 0 : static_cast<int>(run.states.front().rows());
    const int n = run.states.empty() ? 0 : static_cast<int>(run.states.front().cols());
    out << "t";
    for (int i = 1; i <= m; ++i)
        for (int c = 1; c <= n; ++c) out << ",x" << i << "_" << c;
    out << "\n";
    for (size_t s = 0; s < run.times.size(); ++s) {
        out << format_double(run.times[s]);
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < n; ++c)
                out << "," << format_double(run.states[s](i, c));
        out << "\n";
    }
}

void write_weights_csv(const std::string& path, const SimulationRun& run) {
    if (!run.adaptive)
        throw std::invalid_argument("weights CSV needs an adaptive run");
    auto out = open_out(path);
    out << "t";
    for (const auto& [i, j] : run.edge_order) out << "," << i << "-" << j;
    out << "\n";
    for (size_t s = 0; s < run.weights.size(); ++s) {
        out << format_double(run.times[s]);
        for (int e = 0; e < run.weights[s].size(); ++e)
            out << "," << format_double(run.weights[s](e));
        out << "\n";
    }
}

void write_trace_csv(const std::string& path, const MetricTrace& trace) {
    auto out = open_out(path);
    out << "t," << (trace.name.empty() ? "value" : trace.name) << "\n";
    for (size_t s = 0; s < trace.times.size(); ++s)
        out << format_double(trace.times[s]) << ","
            << format_double(trace.values[s]) << "\n";
}

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& matrix) {
    auto out = open_out(path);
    for (int r = 0; r < matrix.rows(); ++r) {
        for (int c = 0; c < matrix.cols(); ++c) {
            if (c > 0) out << ",";
            out << format_double(matrix(r, c));
        }
        out << "\n";
    }
}

void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
    auto out = open_out(path);
    for (size_t c = 0; c < header.size(); ++c) {
        if (c > 0) out << ",";
        out << header[c];
    }
    out << "\n";
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << ",";
            out << format_double(row[c]);
        }
        out << "\n";
    }
}

}  // namespace clustersync
