#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stsc/bits.hpp"
#include "stsc/golden.hpp"
#include "stsc/matrix.hpp"

namespace stsc {

using GMat = Mat<GoldenElem>;

enum class SchemeKind { Ssm, Dsm, MacGolden };

// Transmission scheme for the two-helper repair of a 4-bit fragment.
// SSM sends one 16-QAM symbol per helper in a single channel use; DSM sends
// two 4-QAM symbols per helper over two uses; MacGolden additionally mixes
// the two 4-QAM symbols through the golden ring with shaping by alpha and an
// optional twisting unit i in the lower-left entry.
struct Scheme {
    SchemeKind kind = SchemeKind::Ssm;
    bool twist = true;  // meaningful for MacGolden only

    constexpr Scheme() = default;
    constexpr Scheme(SchemeKind k, bool tw = true) : kind(k), twist(tw) {}

    int channel_uses() const { return kind == SchemeKind::Ssm ? 1 : 2; }
    int helpers() const { return 2; }
    int rows_total() const { return 2; }  // helpers * n_t with n_t = 1
    int bits_per_trial() const { return 8; }

    // ssm | dsm | mac-golden | mac-golden-notwist
    std::string name() const;
    // Stable small id used in seed derivation.
    std::uint64_t id() const;

    static Scheme parse(std::string_view name);

    friend bool operator==(const Scheme& x, const Scheme& y) {
        if (x.kind != y.kind) return false;
        return x.kind != SchemeKind::MacGolden || x.twist == y.twist;
    }
};

struct Codeword {
    CMat matrix;  // rows_total x channel_uses
    Bits b1;
    Bits b2;
    // Exact ring description of the unnormalized matrix (MacGolden only).
    std::optional<GMat> exact_form;
};

struct Codebook {
    Scheme scheme;
    std::vector<Codeword> codewords;  // lexicographic in (b1, b2); matrices normalized
    double normalization = 1.0;       // amplitude scale applied to the raw encoder output

    std::size_t size() const { return codewords.size(); }
    const Codeword& at(const Bits& b1, const Bits& b2) const;
};

// Raw (unnormalized) per-scheme encoders for one trial's pair of 4-bit
// fragments.
Codeword encode_dsm(const Bits& b1, const Bits& b2);
Codeword encode_ssm(const Bits& b1, const Bits& b2);
Codeword encode_mac_golden(const Bits& b1, const Bits& b2, bool twist);
Codeword encode_scheme(Scheme s, const Bits& b1, const Bits& b2);

// Amplitude scale making the codebook average energy per channel use per
// helper equal to 1.
double scheme_normalization(Scheme s);

// All 256 codewords in lexicographic (b1, b2) order, matrices scaled by the
// scheme normalization.
Codebook enumerate_codebook(Scheme s);

// K*n_t x d*n_t block matrix whose (j, m) block is conjugates[m](inner[j]).
// conjugates[0] must be the identity map.
template <class T>
Mat<T> assemble_block(const std::vector<Mat<T>>& inner,
                      const std::vector<std::function<T(const T&)>>& conjugates) {
    if (inner.empty() || conjugates.empty()) throw std::invalid_argument("assemble_block: empty input");
    const std::size_t nt = inner.front().rows;
    for (const auto& m : inner)
        if (m.rows != nt || m.cols != nt) throw std::invalid_argument("assemble_block: inner matrices must be square and same size");
    const std::size_t big_k = inner.size();
    const std::size_t d = conjugates.size();
    Mat<T> out(big_k * nt, d * nt);
    for (std::size_t j = 0; j < big_k; ++j)
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t r = 0; r < nt; ++r)
                for (std::size_t c = 0; c < nt; ++c)
                    out(j * nt + r, m * nt + c) = conjugates[m](inner[j](r, c));
    return out;
}

// Left regular representation of x0 + e*x1 + ... + e^(n-1)*x_{n-1} in the
// cyclic algebra with e^n = gamma and x*e = e*sigma(x). The caller supplies
// each coordinate with its sigma-orbit: orbits[i][k] = sigma^k(x_i) as a
// complex embedding. Column j holds the coordinates of the element times
// e^j; gamma multiplies the wrap-around entries above the diagonal.
CMat lrr(const std::vector<std::vector<std::complex<double>>>& orbits,
         std::complex<double> gamma);

}  // namespace stsc
