#include "stsc/modulation.hpp"

#include <stdexcept>

namespace stsc {

namespace {

void require_len(const Bits& bits, std::size_t n, const char* who) {
    if (bits.size() != n) throw std::invalid_argument(std::string(who) + ": wrong bit count");
    for (auto b : bits)
        if (b > 1) throw std::invalid_argument(std::string(who) + ": bits must be 0 or 1");
}

// Per-axis 2-bit Gray code: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
double pam4_gray(unsigned hi, unsigned lo) {
    if (hi == 0) return lo == 0 ? -3.0 : -1.0;
    return lo == 0 ? 3.0 : 1.0;
}

Constellation build_qam4() {
    Constellation c;
    c.order = 4;
    for (std::uint32_t v = 0; v < 4; ++v) {
        Bits b = bits_from_uint(v, 2);
        c.points.emplace_back(b, gray4(b));
    }
    return c;
}

Constellation build_qam16() {
    Constellation c;
    c.order = 16;
    for (std::uint32_t v = 0; v < 16; ++v) {
        Bits b = bits_from_uint(v, 4);
        c.points.emplace_back(b, gray16(b));
    }
    return c;
}

}  // namespace

double Constellation::average_energy() const {
    double s = 0.0;
    for (const auto& [bits, pt] : points) s += std::norm(pt);
    return s / static_cast<double>(points.size());
}

const Constellation& Constellation::qam4() {
    static const Constellation c = build_qam4();
    return c;
}

const Constellation& Constellation::qam16() {
    static const Constellation c = build_qam16();
    return c;
}

std::complex<double> gray4(const Bits& bits) {
    require_len(bits, 2, "gray4");
    return {bits[0] ? 1.0 : -1.0, bits[1] ? 1.0 : -1.0};
}

std::complex<double> gray16(const Bits& bits) {
    require_len(bits, 4, "gray16");
    return {pam4_gray(bits[0], bits[1]), pam4_gray(bits[2], bits[3])};
}

GoldenElem lift_golden(const Bits& bits) {
    require_len(bits, 4, "lift_golden");
    const auto unit = gray4({bits[0], bits[1]});
    const auto golden = gray4({bits[2], bits[3]});
    const auto as_gauss = [](std::complex<double> z) {
        return GaussInt{static_cast<std::int64_t>(z.real()), static_cast<std::int64_t>(z.imag())};
    };
    return {as_gauss(unit), as_gauss(golden)};
}

Bits delift_golden(const GoldenElem& x) {
    const auto degray4 = [](const GaussInt& g) -> Bits {
        if ((g.re != 1 && g.re != -1) || (g.im != 1 && g.im != -1))
            throw std::invalid_argument("delift_golden: coordinate not a 4-QAM point");
        return {static_cast<std::uint8_t>(g.re == 1), static_cast<std::uint8_t>(g.im == 1)};
    };
    Bits out = degray4(x.a);
    Bits lo = degray4(x.b);
    out.insert(out.end(), lo.begin(), lo.end());
    return out;
}

Bits demap(const Constellation& c, std::complex<double> point) {
    if (c.points.empty()) throw std::invalid_argument("demap: empty constellation");
    std::size_t best = 0;
    double best_d = std::norm(point - c.points[0].second);
    for (std::size_t i = 1; i < c.points.size(); ++i) {
        const double d = std::norm(point - c.points[i].second);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return c.points[best].first;
}

}  // namespace stsc
