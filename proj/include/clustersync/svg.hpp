#pragma once

#include <string>
#include <vector>

#include "clustersync/metrics.hpp"

namespace clustersync {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions {
    std::string title;
    std::string x_label = "t";
    std::string y_label;
    bool log_y = false;  // base-10 log scale; non-positive values are skipped
};

/// Minimal static line chart: axes with ticks, one polyline per series, a
/// small legend. No external renderer.
void write_svg_lineplot(const std::string& path,
                        const std::vector<PlotSeries>& series,
                        const PlotOptions& options = {});

PlotSeries to_series(const MetricTrace& trace);

}  // namespace clustersync
