#pragma once

#include <cstdint>

namespace icet {

// Binary-reflected Gray code: adjacent integers map to codewords at
// Hamming distance 1, so incrementing a parameter never crosses a
// multi-bit cliff.
constexpr std::uint32_t gray_encode(std::uint32_t value) {
    return value ^ (value >> 1);
}

constexpr std::uint32_t gray_decode(std::uint32_t code) {
    std::uint32_t value = code;
    for (std::uint32_t shift = 1; shift < 32; shift <<= 1)
        value ^= value >> shift;
    return value;
}

} // namespace icet
