#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "icet/dataset.hpp"

namespace icet {

struct SplitPair {
    Dataset train;
    Dataset test;
    std::uint64_t seed = 0;
};

// splitmix64 step; used to derive per-trial seeds from (master, index)
// without correlated streams.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Unbiased bounded draw from mt19937_64 by rejection; together with the
// explicit Fisher-Yates below this pins the shuffle across platforms
// (std::shuffle is implementation-defined).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
std::vector<int> shuffled_indices(int n, std::uint64_t seed);

// Train gets round(2N/3) cases, test the rest.
SplitPair random_split(const Dataset& d, std::uint64_t seed);

// 50/50, sizes differing by at most 1 (train gets the extra case).
SplitPair sub_split(const Dataset& train, std::uint64_t seed);

} // namespace icet
