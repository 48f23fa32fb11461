#pragma once

#include <string>
#include <vector>

namespace icet {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points; // sorted by x
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    std::vector<PlotSeries> series;
};

// Minimal line plot; styling is incidental, the row files are the contract.
std::string render_line_plot(const PlotSpec& spec);

} // namespace icet
