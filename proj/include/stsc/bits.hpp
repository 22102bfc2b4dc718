#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stsc {

// A bit string, one 0/1 value per element, most significant bit first.
using Bits = std::vector<std::uint8_t>;

Bits bits_from_string(std::string_view s);
std::string bits_to_string(const Bits& b);

// MSB-first integer value of the string; length must be <= 32.
std::uint32_t bits_to_uint(const Bits& b);
Bits bits_from_uint(std::uint32_t v, std::size_t n);

// Elementwise XOR; lengths must match.
Bits xor_bits(const Bits& a, const Bits& b);
std::size_t hamming(const Bits& a, const Bits& b);

}  // namespace stsc
