#pragma once

#include <cstddef>
#include <vector>

#include "stsc/channel.hpp"
#include "stsc/kernels.hpp"
#include "stsc/stcode.hpp"

namespace stsc {

struct DecodeResult {
    std::size_t index = 0;  // position in the codebook
    Bits b1;
    Bits b2;
    double metric = 0.0;  // squared Frobenius residual of the chosen codeword
};

// Exhaustive joint ML decoder: argmin over all codewords of
// sum_t ||Y[:,t] - H_t X[:,t]||^2, ties broken by lowest codeword index.
// Holds the codebook in SoA layout plus scratch buffers, so one instance per
// worker; decoding itself is deterministic and independent of n_r until the
// realization supplies it.
class MlDecoder {
  public:
    explicit MlDecoder(const Codebook& cb);

    DecodeResult decode(const CMat& y, const ChannelRealization& realization);

  private:
    const Codebook* cb_;
    std::size_t n_ = 0;       // codebook size
    std::size_t padded_ = 0;  // n rounded up to the SIMD width
    std::size_t rows_ = 0;
    std::size_t uses_ = 0;
    std::vector<double> x_re_, x_im_;  // [(t*rows + j) * padded + c]
    std::vector<double> p_re_, p_im_;  // predicted column, per candidate
    std::vector<double> metrics_;
};

// Convenience wrapper building a one-shot decoder.
DecodeResult ml_decode(const CMat& y, const ChannelRealization& realization, const Codebook& cb);

}  // namespace stsc
