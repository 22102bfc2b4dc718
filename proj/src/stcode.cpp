#include "stsc/stcode.hpp"

#include <cmath>
#include <stdexcept>

#include "stsc/modulation.hpp"

namespace stsc {

std::string Scheme::name() const {
    switch (kind) {
        case SchemeKind::Ssm: return "ssm";
        case SchemeKind::Dsm: return "dsm";
        case SchemeKind::MacGolden: return twist ? "mac-golden" : "mac-golden-notwist";
    }
    throw std::logic_error("Scheme::name: bad kind");
}

std::uint64_t Scheme::id() const {
    switch (kind) {
        case SchemeKind::Ssm: return 0;
        case SchemeKind::Dsm: return 1;
        case SchemeKind::MacGolden: return twist ? 2 : 3;
    }
    throw std::logic_error("Scheme::id: bad kind");
}

Scheme Scheme::parse(std::string_view name) {
    if (name == "ssm") return {SchemeKind::Ssm};
    if (name == "dsm") return {SchemeKind::Dsm};
    if (name == "mac-golden" || name == "mac-golden-twist") return {SchemeKind::MacGolden, true};
    if (name == "mac-golden-notwist") return {SchemeKind::MacGolden, false};
    throw std::invalid_argument("unknown scheme: " + std::string(name));
}

const Codeword& Codebook::at(const Bits& b1, const Bits& b2) const {
    const std::size_t idx = (static_cast<std::size_t>(bits_to_uint(b1)) << b2.size()) | bits_to_uint(b2);
    if (idx >= codewords.size()) throw std::out_of_range("Codebook::at: index out of range");
    return codewords[idx];
}

namespace {

void require_fragment(const Bits& b, const char* who) {
    if (b.size() != 4) throw std::invalid_argument(std::string(who) + ": fragment must be 4 bits");
}

Bits pair_at(const Bits& b, std::size_t j) { return {b[2 * j], b[2 * j + 1]}; }

}  // namespace

Codeword encode_dsm(const Bits& b1, const Bits& b2) {
    require_fragment(b1, "encode_dsm");
    require_fragment(b2, "encode_dsm");
    Codeword cw;
    cw.b1 = b1;
    cw.b2 = b2;
    cw.matrix = CMat(2, 2);
    for (std::size_t t = 0; t < 2; ++t) {
        cw.matrix(0, t) = gray4(pair_at(b1, t));
        cw.matrix(1, t) = gray4(pair_at(b2, t));
    }
    return cw;
}

Codeword encode_ssm(const Bits& b1, const Bits& b2) {
    require_fragment(b1, "encode_ssm");
    require_fragment(b2, "encode_ssm");
    Codeword cw;
    cw.b1 = b1;
    cw.b2 = b2;
    cw.matrix = CMat(2, 1);
    cw.matrix(0, 0) = gray16(b1);
    cw.matrix(1, 0) = gray16(b2);
    return cw;
}

Codeword encode_mac_golden(const Bits& b1, const Bits& b2, bool twist) {
    require_fragment(b1, "encode_mac_golden");
    require_fragment(b2, "encode_mac_golden");
    const GoldenElem x1 = lift_golden(b1);
    const GoldenElem x2 = lift_golden(b2);
    const GoldenElem alpha = golden_alpha();
    const GoldenElem alpha_c = tau(alpha);
    const GaussInt w = twist ? GaussInt{0, 1} : GaussInt{1, 0};

    GMat exact(2, 2);
    exact(0, 0) = alpha * x1;
    exact(0, 1) = alpha_c * tau(x1);
    exact(1, 0) = w * (alpha * x2);
    exact(1, 1) = alpha_c * tau(x2);

    Codeword cw;
    cw.b1 = b1;
    cw.b2 = b2;
    cw.matrix = CMat(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) cw.matrix(r, c) = embed(exact(r, c));
    cw.exact_form = std::move(exact);
    return cw;
}

Codeword encode_scheme(Scheme s, const Bits& b1, const Bits& b2) {
    switch (s.kind) {
        case SchemeKind::Ssm: return encode_ssm(b1, b2);
        case SchemeKind::Dsm: return encode_dsm(b1, b2);
        case SchemeKind::MacGolden: return encode_mac_golden(b1, b2, s.twist);
    }
    throw std::logic_error("encode_scheme: bad kind");
}

double scheme_normalization(Scheme s) {
    // Average codebook energy per entry is 2 for 4-QAM and 10 for both
    // 16-QAM and the shaped golden entries; scale so a helper radiates unit
    // average energy per channel use.
    switch (s.kind) {
        case SchemeKind::Ssm: return 1.0 / std::sqrt(10.0);
        case SchemeKind::Dsm: return 1.0 / std::sqrt(2.0);
        case SchemeKind::MacGolden: return 1.0 / std::sqrt(10.0);
    }
    throw std::logic_error("scheme_normalization: bad kind");
}

Codebook enumerate_codebook(Scheme s) {
    Codebook cb;
    cb.scheme = s;
    cb.normalization = scheme_normalization(s);
    cb.codewords.reserve(256);
    for (std::uint32_t v1 = 0; v1 < 16; ++v1) {
        for (std::uint32_t v2 = 0; v2 < 16; ++v2) {
            Codeword cw = encode_scheme(s, bits_from_uint(v1, 4), bits_from_uint(v2, 4));
            cw.matrix = cb.normalization * cw.matrix;
            cb.codewords.push_back(std::move(cw));
        }
    }
    return cb;
}

CMat lrr(const std::vector<std::vector<std::complex<double>>>& orbits, std::complex<double> gamma) {
    const std::size_t n = orbits.size();
    if (n == 0) throw std::invalid_argument("lrr: need at least one coordinate");
    if (gamma == std::complex<double>{0.0, 0.0}) throw std::invalid_argument("lrr: gamma must be nonzero");
    for (const auto& orbit : orbits)
        if (orbit.size() != n) throw std::invalid_argument("lrr: each coordinate needs n conjugates");

    // Column c holds the element times e^c: entry (r, c) is
    // sigma^c(x_{(r-c) mod n}), picking up gamma on the wrap-around.
    CMat m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t src = (r + n - c) % n;
            m(r, c) = orbits[src][c];
            if (r < c) m(r, c) *= gamma;
        }
    }
    return m;
}

}  // namespace stsc
