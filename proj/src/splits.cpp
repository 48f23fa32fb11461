#include "icet/splits.hpp"

#include <numeric>
#include <stdexcept>

namespace icet {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // rejection sampling on the top of the 64-bit range
    const std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::vector<int> shuffled_indices(int n, std::uint64_t seed) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(idx[i], idx[j]);
    }
    return idx;
}

namespace {

SplitPair split_at(const Dataset& d, std::uint64_t seed, int train_size) {
    auto idx = shuffled_indices(d.n_cases(), seed);
    std::vector<int> train_rows(idx.begin(), idx.begin() + train_size);
    std::vector<int> test_rows(idx.begin() + train_size, idx.end());
    return SplitPair{d.subset(train_rows), d.subset(test_rows), seed};
}

} // namespace

SplitPair random_split(const Dataset& d, std::uint64_t seed) {
    const int n = d.n_cases();
    if (n == 0) throw std::runtime_error("random_split: empty dataset");
    // nearest integer to 2N/3, matching the published per-dataset sizes
    const int train_size = (2 * n + 1) / 3;
    return split_at(d, seed, train_size);
}

SplitPair sub_split(const Dataset& train, std::uint64_t seed) {
    const int n = train.n_cases();
    if (n < 2) throw std::runtime_error("sub_split: need >=2 cases");
    return split_at(train, seed, (n + 1) / 2);
}

} // namespace icet
