#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace icet {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::string render_line_plot(const PlotSpec& spec) {
    const double width = 640, height = 420;
    const double ml = 70, mr = 20, mt = 40, mb = 55;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    bool first = true;
    for (const auto& s : spec.series) {
        for (auto [x, y] : s.points) {
            double xv = spec.log_x ? std::log10(x) : x;
            if (first) {
                x_min = x_max = xv;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, xv);
            x_max = std::max(x_max, xv);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max <= x_min) x_max = x_min + 1;
    if (y_max <= y_min) y_max = y_min + 1;
    y_min = std::min(y_min, 0.0);
    y_max *= 1.05;

    auto px = [&](double x) {
        double xv = spec.log_x ? std::log10(x) : x;
        return ml + (xv - x_min) / (x_max - x_min) * pw;
    };
    auto py = [&](double y) { return mt + ph - (y - y_min) / (y_max - y_min) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "' font-family='sans-serif' font-size='12'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    svg << "<text x='" << width / 2 << "' y='20' text-anchor='middle' font-size='14'>"
        << spec.title << "</text>\n";

    // frame
    svg << "<rect x='" << ml << "' y='" << mt << "' width='" << pw << "' height='" << ph
        << "' fill='none' stroke='black'/>\n";

    // y ticks
    for (int i = 0; i <= 5; ++i) {
        double y = y_min + (y_max - y_min) * i / 5.0;
        svg << "<line x1='" << ml - 4 << "' y1='" << py(y) << "' x2='" << ml << "' y2='" << py(y)
            << "' stroke='black'/>\n";
        svg << "<text x='" << ml - 8 << "' y='" << py(y) + 4
            << "' text-anchor='end'>" << fmt(std::round(y * 10) / 10) << "</text>\n";
    }

    // x ticks at the data points of the first series
    std::vector<double> xs;
    if (!spec.series.empty())
        for (auto [x, y] : spec.series.front().points) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (double x : xs) {
        svg << "<line x1='" << px(x) << "' y1='" << mt + ph << "' x2='" << px(x) << "' y2='"
            << mt + ph + 4 << "' stroke='black'/>\n";
        svg << "<text x='" << px(x) << "' y='" << mt + ph + 18 << "' text-anchor='middle'>"
            << fmt(x) << "</text>\n";
    }

    svg << "<text x='" << ml + pw / 2 << "' y='" << height - 12
        << "' text-anchor='middle'>" << spec.x_label << "</text>\n";
    svg << "<text x='16' y='" << mt + ph / 2 << "' text-anchor='middle' transform='rotate(-90 16 "
        << mt + ph / 2 << ")'>" << spec.y_label << "</text>\n";

    int ci = 0;
    double ly = mt + 10;
    for (const auto& s : spec.series) {
        const char* color = kColors[ci++ % 6];
        svg << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        for (auto [x, y] : s.points) svg << px(x) << "," << py(y) << " ";
        svg << "'/>\n";
        for (auto [x, y] : s.points)
            svg << "<circle cx='" << px(x) << "' cy='" << py(y) << "' r='2.5' fill='" << color
                << "'/>\n";
        svg << "<rect x='" << ml + pw - 110 << "' y='" << ly - 9
            << "' width='10' height='10' fill='" << color << "'/>\n";
        svg << "<text x='" << ml + pw - 95 << "' y='" << ly << "'>" << s.label << "</text>\n";
        ly += 16;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace icet
