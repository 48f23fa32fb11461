#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "icet/gray.hpp"

namespace icet {

// Decoded view of an individual's bias for the inducer.
struct DecodedBias {
    std::vector<double> pseudo_costs; // in [1, 10000]; empty in binary mode
    double omega = 1.0;               // in [0, 1]
    double cf = 25.0;                 // in [1, 100]
    std::vector<bool> excluded;       // pseudo-cost > 9000, or a cleared include bit
};

inline constexpr int kPseudoCostBits = 12;
inline constexpr int kRealFieldBits = 8;
inline constexpr double kPseudoCostMin = 1.0;
inline constexpr double kPseudoCostMax = 10000.0;
inline constexpr double kExclusionThreshold = 9000.0;

// Gray-coded field helpers. Codes map linearly onto [lo, hi] with code 0 at
// lo and the all-ones code at hi.
double decode_range(std::uint32_t gray_code, int width, double lo, double hi);
std::uint32_t encode_range(double value, int width, double lo, double hi);

// A bit-string bias. Real mode: n Gray-coded 12-bit pseudo-costs, then
// 8 bits of omega and 8 bits of cf (12n+16 bits). Binary mode: n include
// bits, then the same two 8-bit fields (n+16 bits).
//
// A seeded individual additionally carries the exact parameter vector it
// was built from; its decode() returns those exact values (a 12-bit grid
// cannot represent e.g. $7.27), while any genome produced from its bits by
// crossover/mutation decodes normally.
class BiasIndividual {
public:
    BiasIndividual() = default;

    static BiasIndividual random(int n_attributes, bool binary_mode, std::mt19937_64& rng);
    static BiasIndividual from_bits(std::vector<std::uint8_t> bits, int n_attributes,
                                    bool binary_mode);
    static BiasIndividual seeded(const std::vector<double>& true_costs, double omega, double cf);

    DecodedBias decode() const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }
    int n_attributes() const { return n_attributes_; }
    bool binary_mode() const { return binary_mode_; }
    bool is_seed() const { return exact_.has_value(); }

    // Genetic operators work on raw bits; any result loses seed exactness.
    static std::pair<BiasIndividual, BiasIndividual> two_point_crossover(
        const BiasIndividual& a, const BiasIndividual& b, std::mt19937_64& rng);
    BiasIndividual mutated(double rate, std::mt19937_64& rng) const;

    static int bit_length(int n_attributes, bool binary_mode) {
        return binary_mode ? n_attributes + 2 * kRealFieldBits
                           : n_attributes * kPseudoCostBits + 2 * kRealFieldBits;
    }

private:
    std::vector<std::uint8_t> bits_;
    int n_attributes_ = 0;
    bool binary_mode_ = false;
    std::optional<DecodedBias> exact_;

    std::uint32_t field(int offset, int width) const;
    void set_field(int offset, int width, std::uint32_t code);
};

} // namespace icet
