#include "icet/genome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icet {

double decode_range(std::uint32_t gray_code, int width, double lo, double hi) {
    const std::uint32_t max_code = (1u << width) - 1;
    const std::uint32_t v = gray_decode(gray_code);
    return lo + static_cast<double>(v) * (hi - lo) / static_cast<double>(max_code);
}

std::uint32_t encode_range(double value, int width, double lo, double hi) {
    const std::uint32_t max_code = (1u << width) - 1;
    double clamped = std::clamp(value, lo, hi);
    auto v = static_cast<std::uint32_t>(
        std::lround((clamped - lo) * static_cast<double>(max_code) / (hi - lo)));
    return gray_encode(std::min(v, max_code));
}

std::uint32_t BiasIndividual::field(int offset, int width) const {
    std::uint32_t code = 0;
    for (int i = 0; i < width; ++i) code = (code << 1) | bits_[offset + i];
    return code;
}

void BiasIndividual::set_field(int offset, int width, std::uint32_t code) {
    for (int i = 0; i < width; ++i)
        bits_[offset + i] = static_cast<std::uint8_t>((code >> (width - 1 - i)) & 1u);
}

BiasIndividual BiasIndividual::random(int n_attributes, bool binary_mode, std::mt19937_64& rng) {
    BiasIndividual ind;
    ind.n_attributes_ = n_attributes;
    ind.binary_mode_ = binary_mode;
    ind.bits_.resize(bit_length(n_attributes, binary_mode));
    for (auto& b : ind.bits_) b = static_cast<std::uint8_t>(rng() & 1u);
    return ind;
}

BiasIndividual BiasIndividual::from_bits(std::vector<std::uint8_t> bits, int n_attributes,
                                         bool binary_mode) {
    if (static_cast<int>(bits.size()) != bit_length(n_attributes, binary_mode))
        throw std::invalid_argument("bias bit string has the wrong length");
    BiasIndividual ind;
    ind.bits_ = std::move(bits);
    ind.n_attributes_ = n_attributes;
    ind.binary_mode_ = binary_mode;
    return ind;
}

BiasIndividual BiasIndividual::seeded(const std::vector<double>& true_costs, double omega,
                                      double cf) {
    const int n = static_cast<int>(true_costs.size());
    BiasIndividual ind;
    ind.n_attributes_ = n;
    ind.binary_mode_ = false;
    ind.bits_.resize(bit_length(n, false));
    for (int i = 0; i < n; ++i)
        ind.set_field(i * kPseudoCostBits, kPseudoCostBits,
                      encode_range(true_costs[i], kPseudoCostBits, kPseudoCostMin, kPseudoCostMax));
    int off = n * kPseudoCostBits;
    ind.set_field(off, kRealFieldBits, encode_range(omega, kRealFieldBits, 0.0, 1.0));
    ind.set_field(off + kRealFieldBits, kRealFieldBits,
                  encode_range(cf, kRealFieldBits, 1.0, 100.0));

    DecodedBias exact;
    exact.pseudo_costs = true_costs;
    exact.omega = omega;
    exact.cf = cf;
    exact.excluded.assign(n, false);
    for (int i = 0; i < n; ++i) exact.excluded[i] = true_costs[i] > kExclusionThreshold;
    ind.exact_ = std::move(exact);
    return ind;
}

DecodedBias BiasIndividual::decode() const {
    if (exact_) return *exact_;

    DecodedBias d;
    const int n = n_attributes_;
    d.excluded.assign(n, false);
    int off = 0;
    if (binary_mode_) {
        for (int i = 0; i < n; ++i) d.excluded[i] = (bits_[i] == 0);
        off = n;
    } else {
        d.pseudo_costs.resize(n);
        for (int i = 0; i < n; ++i) {
            d.pseudo_costs[i] = decode_range(field(i * kPseudoCostBits, kPseudoCostBits),
                                             kPseudoCostBits, kPseudoCostMin, kPseudoCostMax);
            d.excluded[i] = d.pseudo_costs[i] > kExclusionThreshold;
        }
        off = n * kPseudoCostBits;
    }
    d.omega = decode_range(field(off, kRealFieldBits), kRealFieldBits, 0.0, 1.0);
    d.cf = decode_range(field(off + kRealFieldBits, kRealFieldBits), kRealFieldBits, 1.0, 100.0);
    return d;
}

std::pair<BiasIndividual, BiasIndividual> BiasIndividual::two_point_crossover(
    const BiasIndividual& a, const BiasIndividual& b, std::mt19937_64& rng) {
    if (a.bits_.size() != b.bits_.size())
        throw std::invalid_argument("crossover on mismatched genomes");
    const std::size_t len = a.bits_.size();
    std::uniform_int_distribution<std::size_t> pick(0, len - 1);
    std::size_t x1 = pick(rng), x2 = pick(rng);
    if (x1 > x2) std::swap(x1, x2);

    BiasIndividual c1 = from_bits(a.bits_, a.n_attributes_, a.binary_mode_);
    BiasIndividual c2 = from_bits(b.bits_, b.n_attributes_, b.binary_mode_);
    for (std::size_t i = x1; i < x2; ++i) std::swap(c1.bits_[i], c2.bits_[i]);
    return {std::move(c1), std::move(c2)};
}

BiasIndividual BiasIndividual::mutated(double rate, std::mt19937_64& rng) const {
    BiasIndividual out = from_bits(bits_, n_attributes_, binary_mode_);
    if (rate <= 0.0) {
        out.exact_ = exact_;
        return out;
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    bool changed = false;
    for (auto& b : out.bits_) {
        if (u(rng) < rate) {
            b ^= 1u;
            changed = true;
        }
    }
    if (!changed) out.exact_ = exact_; // an untouched copy keeps seed exactness
    return out;
}

} // namespace icet
