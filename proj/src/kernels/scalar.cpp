#include "stsc/kernels.hpp"

// Reference kernels. The SIMD variants must replay this exact per-candidate
// operation sequence; keep the expressions in sync with avx2.cpp.

namespace stsc::kernels {

namespace {

void cmul_acc_scalar(std::size_t n, double h_re, double h_im, const double* x_re,
                     const double* x_im, double* out_re, double* out_im) {
    for (std::size_t c = 0; c < n; ++c) {
        const double t_re = h_re * x_re[c] - h_im * x_im[c];
        const double t_im = h_im * x_re[c] + h_re * x_im[c];
        out_re[c] = out_re[c] + t_re;
        out_im[c] = out_im[c] + t_im;
    }
}

void sqdist_acc_scalar(std::size_t n, double y_re, double y_im, const double* p_re,
                       const double* p_im, double* acc) {
    for (std::size_t c = 0; c < n; ++c) {
        const double d_re = y_re - p_re[c];
        const double d_im = y_im - p_im[c];
        acc[c] = acc[c] + (d_re * d_re + d_im * d_im);
    }
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{"scalar", cmul_acc_scalar, sqdist_acc_scalar};
    return set;
}

std::size_t argmin(const double* v, std::size_t n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

}  // namespace stsc::kernels
