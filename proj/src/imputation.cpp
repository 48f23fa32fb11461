#include "icet/imputation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icet {

Dataset drop_missing_cases(const Dataset& d) {
    std::vector<int> keep;
    for (int c = 0; c < d.n_cases(); ++c)
        if (d.case_complete(c)) keep.push_back(c);
    return d.subset(keep);
}

Dataset impute_nearest_neighbor(const Dataset& d) {
    const int n = d.n_cases();
    const int na = d.n_attributes();
    if (n < 2) throw std::runtime_error("impute_nearest_neighbor: need >=2 cases");

    // min-max ranges from the observed values
    std::vector<double> lo(na, 0.0), range(na, 0.0);
    for (int a = 0; a < na; ++a) {
        double mn = 0, mx = 0;
        bool seen = false;
        for (int c = 0; c < n; ++c) {
            double v = d.value(c, a);
            if (is_missing(v)) continue;
            if (!seen) { mn = mx = v; seen = true; }
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        lo[a] = mn;
        range[a] = mx - mn;
    }

    auto distance = [&](int x, int y) {
        double sum = 0.0;
        for (int a = 0; a < na; ++a) {
            double vx = d.value(x, a), vy = d.value(y, a);
            if (is_missing(vx) || is_missing(vy)) {
                sum += 1.0;
            } else if (!d.attribute(a).continuous) {
                sum += (vx == vy) ? 0.0 : 1.0;
            } else if (range[a] > 0.0) {
                sum += std::abs(vx - vy) / range[a];
            }
            // constant continuous attribute: both values equal, contributes 0
        }
        return sum;
    };

    // distances computed on the original data, so the result does not depend
    // on the order in which cases get filled
    Dataset out(d.attributes(), d.classes());
    for (int c = 0; c < n; ++c) {
        std::vector<double> values = d.case_values(c);
        if (!d.case_complete(c)) {
            std::vector<std::pair<double, int>> order;
            order.reserve(n - 1);
            for (int o = 0; o < n; ++o)
                if (o != c) order.emplace_back(distance(c, o), o);
            std::sort(order.begin(), order.end());
            for (int a = 0; a < na; ++a) {
                if (!is_missing(values[a])) continue;
                for (const auto& [dist, o] : order) {
                    double v = d.value(o, a);
                    if (!is_missing(v)) { values[a] = v; break; }
                }
                if (is_missing(values[a]))
                    throw std::runtime_error("attribute '" + d.attribute(a).name +
                                             "' is missing in every case");
            }
        }
        out.add_case(values, d.label(c));
    }
    return out;
}

} // namespace icet
