#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace stsc::kernels {

// Data-parallel inner loops of the ML metric scan, in structure-of-arrays
// form: one lane per candidate codeword. Every implementation executes the
// identical per-candidate operation sequence (multiply, then add; no FMA),
// so scalar and SIMD variants produce bit-identical results and runtime
// dispatch cannot perturb a simulation.

// out[c] += h * x[c] (complex, h broadcast):
//   t_re = h_re*x_re[c] - h_im*x_im[c]; out_re[c] += t_re;  (same for im)
using CmulAccFn = void (*)(std::size_t n, double h_re, double h_im,
                           const double* x_re, const double* x_im,
                           double* out_re, double* out_im);

// acc[c] += |y - p[c]|^2:
//   d_re = y_re - p_re[c]; d_im = y_im - p_im[c];
//   acc[c] += d_re*d_re + d_im*d_im;
using SqdistAccFn = void (*)(std::size_t n, double y_re, double y_im,
                             const double* p_re, const double* p_im,
                             double* acc);

struct KernelSet {
    const char* name;
    CmulAccFn cmul_acc;
    SqdistAccFn sqdist_acc;
};

const KernelSet& scalar_kernels();

// nullptr when the build or the CPU lacks AVX2.
const KernelSet* avx2_kernels();

// All kernel sets usable on this machine (scalar first).
std::vector<const KernelSet*> available_kernels();

// Runtime selection: the best supported set, overridable with
// STSC_KERNEL=scalar|avx2|auto (unknown or unsupported values throw).
const KernelSet& active_kernels();
const KernelSet& kernels_by_name(std::string_view name);

// Index of the smallest element, first occurrence on ties.
std::size_t argmin(const double* v, std::size_t n);

}  // namespace stsc::kernels
