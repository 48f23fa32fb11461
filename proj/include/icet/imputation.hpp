#pragma once

#include "icet/dataset.hpp"

namespace icet {

// Keeps only complete cases.
Dataset drop_missing_cases(const Dataset& d);

// Single-nearest-neighbor fill-in over the whole dataset (runs before any
// split). Distances are summed per attribute on features min-max scaled to
// [0,1]; a pair with either value missing contributes 1; discrete values
// contribute 0/1 for equal/different. Donors are searched outward from the
// nearest case until one actually has the needed value; ties break on the
// lower case index.
Dataset impute_nearest_neighbor(const Dataset& d);

} // namespace icet
