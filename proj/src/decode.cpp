#include "stsc/decode.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsc {

MlDecoder::MlDecoder(const Codebook& cb) : cb_(&cb) {
    if (cb.codewords.empty()) throw std::invalid_argument("MlDecoder: empty codebook");
    n_ = cb.codewords.size();
    padded_ = (n_ + 3) & ~std::size_t{3};
    rows_ = cb.codewords.front().matrix.rows;
    uses_ = cb.codewords.front().matrix.cols;
    for (const auto& cw : cb.codewords)
        if (cw.matrix.rows != rows_ || cw.matrix.cols != uses_)
            throw std::invalid_argument("MlDecoder: ragged codebook");

    // SoA over candidates: one contiguous lane array per (use, row) entry.
    x_re_.assign(uses_ * rows_ * padded_, 0.0);
    x_im_.assign(uses_ * rows_ * padded_, 0.0);
    for (std::size_t c = 0; c < n_; ++c) {
        const CMat& m = cb.codewords[c].matrix;
        for (std::size_t t = 0; t < uses_; ++t) {
            for (std::size_t j = 0; j < rows_; ++j) {
                const std::size_t base = (t * rows_ + j) * padded_;
                x_re_[base + c] = m(j, t).real();
                x_im_[base + c] = m(j, t).imag();
            }
        }
    }
    p_re_.assign(padded_, 0.0);
    p_im_.assign(padded_, 0.0);
    metrics_.assign(padded_, 0.0);
}

DecodeResult MlDecoder::decode(const CMat& y, const ChannelRealization& realization) {
    if (realization.uses() != uses_) throw std::invalid_argument("decode: channel uses mismatch");
    if (y.cols != uses_) throw std::invalid_argument("decode: received block has wrong width");
    const std::size_t n_r = y.rows;
    for (std::size_t t = 0; t < uses_; ++t)
        if (realization.h(t).rows != n_r || realization.h(t).cols != rows_)
            throw std::invalid_argument("decode: channel matrix shape mismatch");

    const kernels::KernelSet& ks = kernels::active_kernels();
    std::fill(metrics_.begin(), metrics_.end(), 0.0);
    for (std::size_t t = 0; t < uses_; ++t) {
        const CMat& h = realization.h(t);
        for (std::size_t r = 0; r < n_r; ++r) {
            std::fill(p_re_.begin(), p_re_.end(), 0.0);
            std::fill(p_im_.begin(), p_im_.end(), 0.0);
            for (std::size_t j = 0; j < rows_; ++j) {
                const std::size_t base = (t * rows_ + j) * padded_;
                ks.cmul_acc(padded_, h(r, j).real(), h(r, j).imag(), x_re_.data() + base,
                            x_im_.data() + base, p_re_.data(), p_im_.data());
            }
            ks.sqdist_acc(padded_, y(r, t).real(), y(r, t).imag(), p_re_.data(), p_im_.data(),
                          metrics_.data());
        }
    }

    const std::size_t best = kernels::argmin(metrics_.data(), n_);
    const Codeword& cw = cb_->codewords[best];
    return {best, cw.b1, cw.b2, metrics_[best]};
}

DecodeResult ml_decode(const CMat& y, const ChannelRealization& realization, const Codebook& cb) {
    MlDecoder dec(cb);
    return dec.decode(y, realization);
}

}  // namespace stsc
