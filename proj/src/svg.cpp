#include "clustersync/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace clustersync {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 30, kTop = 40, kBottom = 55;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string trim_number(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

// Round tick spacing to 1/2/5 x 10^k covering the range.
std::vector<double> ticks(double lo, double hi) {
    if (!(hi > lo)) return {lo};
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
    if (span / step > 10.0) step *= 2.0;
    if (span / step > 10.0) step *= 2.5;
    if (span / step > 10.0) step *= 2.0;
    std::vector<double> result;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step)
        result.push_back(t);
    return result;
}

}  // namespace

PlotSeries to_series(const MetricTrace& trace) {
    return {trace.name, trace.times, trace.values};
}

void write_svg_lineplot(const std::string& path,
                        const std::vector<PlotSeries>& series,
                        const PlotOptions& options) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");

    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    auto value_of = [&](double y) {
        return options.log_y ? std::log10(y) : y;
    };
    for (const auto& s : series) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (options.log_y && !(s.y[i] > 0.0)) continue;
            xlo = std::min(xlo, s.x[i]);
            xhi = std::max(xhi, s.x[i]);
            ylo = std::min(ylo, value_of(s.y[i]));
            yhi = std::max(yhi, value_of(s.y[i]));
        }
    }
    if (!std::isfinite(xlo) || !std::isfinite(ylo)) {
        xlo = 0;
        xhi = 1;
        ylo = 0;
        yhi = 1;
    }
    if (xhi <= xlo) xhi = xlo + 1;
    if (yhi <= ylo) yhi = ylo + 1;

    auto px = [&](double x) {
        return kLeft + (x - xlo) / (xhi - xlo) * (kWidth - kLeft - kRight);
    };
    auto py = [&](double yv) {
        return kHeight - kBottom -
               (yv - ylo) / (yhi - ylo) * (kHeight - kTop - kBottom);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        out << "<text x=\"" << kWidth / 2
            << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
            << options.title << "</text>\n";

    // Axes.
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
        << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";

    for (double t : ticks(xlo, xhi)) {
        const double x = px(t);
        out << "<line x1=\"" << x << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
            << x << "\" y2=\"" << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << kHeight - kBottom + 20
            << "\" text-anchor=\"middle\" font-size=\"11\">" << trim_number(t)
            << "</text>\n";
    }
    for (double t : ticks(ylo, yhi)) {
        const double y = py(t);
        out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft
            << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-size=\"11\">"
            << (options.log_y ? "1e" + trim_number(t) : trim_number(t))
            << "</text>\n";
    }

    out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\""
        << kHeight - 12 << "\" text-anchor=\"middle\" font-size=\"13\">"
        << options.x_label << "</text>\n";
    if (!options.y_label.empty())
        out << "<text x=\"16\" y=\"" << (kTop + kHeight - kBottom) / 2
            << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
            << (kTop + kHeight - kBottom) / 2 << ")\">" << options.y_label
            << "</text>\n";

    for (size_t idx = 0; idx < series.size(); ++idx) {
        const auto& s = series[idx];
        const char* color = kPalette[idx % (sizeof(kPalette) / sizeof(kPalette[0]))];
        // one polyline per contiguous stretch of drawable points
        bool open = false;
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (options.log_y && !(s.y[i] > 0.0)) {
                if (open) out << "\"/>\n";
                open = false;
                continue;
            }
            if (!open) {
                out << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.5\" points=\"";
                open = true;
            }
            out << px(s.x[i]) << "," << py(value_of(s.y[i])) << " ";
        }
        if (open) out << "\"/>\n";
        if (!s.label.empty()) {
            const double ly = kTop + 16.0 * static_cast<double>(idx);
            out << "<line x1=\"" << kWidth - kRight - 120 << "\" y1=\"" << ly
                << "\" x2=\"" << kWidth - kRight - 96 << "\" y2=\"" << ly
                << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
            out << "<text x=\"" << kWidth - kRight - 90 << "\" y=\"" << ly + 4
                << "\" font-size=\"12\">" << s.label << "</text>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace clustersync
