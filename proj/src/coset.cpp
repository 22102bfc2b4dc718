#include "stsc/coset.hpp"

#include <stdexcept>

namespace stsc {

CosetLabel coset_encode(const Bits& bits) {
    if (bits.empty() || bits.size() % 2 != 0)
        throw std::invalid_argument("coset_encode: bit length must be even and positive");
    const int t = static_cast<int>(bits.size() / 2);
    Bits re_bits(bits.begin(), bits.begin() + t);
    Bits im_bits(bits.begin() + t, bits.end());
    return {t, GaussInt{static_cast<std::int64_t>(bits_to_uint(re_bits)),
                        static_cast<std::int64_t>(bits_to_uint(im_bits))}};
}

Bits coset_decode(const CosetLabel& label) {
    if (label.t < 1) throw std::invalid_argument("coset_decode: level must be >= 1");
    const std::int64_t bound = std::int64_t{1} << label.t;
    if (label.rep.re < 0 || label.rep.re >= bound || label.rep.im < 0 || label.rep.im >= bound)
        throw std::invalid_argument("coset_decode: representative out of range");
    Bits out = bits_from_uint(static_cast<std::uint32_t>(label.rep.re), label.t);
    Bits im = bits_from_uint(static_cast<std::uint32_t>(label.rep.im), label.t);
    out.insert(out.end(), im.begin(), im.end());
    return out;
}

CosetLabel coset_label_of(const GaussInt& x, int t) {
    if (t < 1 || t > 62) throw std::invalid_argument("coset_label_of: bad level");
    const std::int64_t m = std::int64_t{1} << t;
    const auto mod = [m](std::int64_t v) {
        std::int64_t r = v % m;
        return r < 0 ? r + m : r;
    };
    return {t, GaussInt{mod(x.re), mod(x.im)}};
}

}  // namespace stsc
