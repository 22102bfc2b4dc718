#include "stsc/bits.hpp"

#include <stdexcept>

namespace stsc {

Bits bits_from_string(std::string_view s) {
    Bits out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bit string may contain only 0 and 1");
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

std::string bits_to_string(const Bits& b) {
    std::string out;
    out.reserve(b.size());
    for (auto v : b) out.push_back(v ? '1' : '0');
    return out;
}

std::uint32_t bits_to_uint(const Bits& b) {
    if (b.size() > 32) throw std::invalid_argument("bits_to_uint: at most 32 bits");
    std::uint32_t v = 0;
    for (auto bit : b) v = (v << 1) | (bit & 1u);
    return v;
}

Bits bits_from_uint(std::uint32_t v, std::size_t n) {
    Bits out(n, 0);
    for (std::size_t i = 0; i < n; ++i) out[n - 1 - i] = static_cast<std::uint8_t>((v >> i) & 1u);
    return out;
}

Bits xor_bits(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) throw std::invalid_argument("xor_bits: length mismatch");
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

std::size_t hamming(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

}  // namespace stsc
