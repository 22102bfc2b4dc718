#include "stsc/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

// Four candidates per vector, mul/add only (no FMA): each lane runs the same
// operation sequence as the scalar reference, so the results are bit-equal.

namespace stsc::kernels {

namespace {

void cmul_acc_avx2(std::size_t n, double h_re, double h_im, const double* x_re,
                   const double* x_im, double* out_re, double* out_im) {
    const __m256d vh_re = _mm256_set1_pd(h_re);
    const __m256d vh_im = _mm256_set1_pd(h_im);
    std::size_t c = 0;
    for (; c + 4 <= n; c += 4) {
        const __m256d xr = _mm256_loadu_pd(x_re + c);
        const __m256d xi = _mm256_loadu_pd(x_im + c);
        const __m256d t_re = _mm256_sub_pd(_mm256_mul_pd(vh_re, xr), _mm256_mul_pd(vh_im, xi));
        const __m256d t_im = _mm256_add_pd(_mm256_mul_pd(vh_im, xr), _mm256_mul_pd(vh_re, xi));
        _mm256_storeu_pd(out_re + c, _mm256_add_pd(_mm256_loadu_pd(out_re + c), t_re));
        _mm256_storeu_pd(out_im + c, _mm256_add_pd(_mm256_loadu_pd(out_im + c), t_im));
    }
    for (; c < n; ++c) {
        const double t_re = h_re * x_re[c] - h_im * x_im[c];
        const double t_im = h_im * x_re[c] + h_re * x_im[c];
        out_re[c] = out_re[c] + t_re;
        out_im[c] = out_im[c] + t_im;
    }
}

void sqdist_acc_avx2(std::size_t n, double y_re, double y_im, const double* p_re,
                     const double* p_im, double* acc) {
    const __m256d vy_re = _mm256_set1_pd(y_re);
    const __m256d vy_im = _mm256_set1_pd(y_im);
    std::size_t c = 0;
    for (; c + 4 <= n; c += 4) {
        const __m256d d_re = _mm256_sub_pd(vy_re, _mm256_loadu_pd(p_re + c));
        const __m256d d_im = _mm256_sub_pd(vy_im, _mm256_loadu_pd(p_im + c));
        const __m256d sq =
            _mm256_add_pd(_mm256_mul_pd(d_re, d_re), _mm256_mul_pd(d_im, d_im));
        _mm256_storeu_pd(acc + c, _mm256_add_pd(_mm256_loadu_pd(acc + c), sq));
    }
    for (; c < n; ++c) {
        const double d_re = y_re - p_re[c];
        const double d_im = y_im - p_im[c];
        acc[c] = acc[c] + (d_re * d_re + d_im * d_im);
    }
}

}  // namespace

namespace detail {

const KernelSet& avx2_kernel_set() {
    static const KernelSet set{"avx2", cmul_acc_avx2, sqdist_acc_avx2};
    return set;
}

}  // namespace detail

}  // namespace stsc::kernels

#endif  // __x86_64__
