#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stsc {

// Checked 64-bit arithmetic. Every enumeration in this project stays far
// below the 64-bit range; an overflow indicates a misuse and throws rather
// than wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in +");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in -");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in *");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// Gaussian integer re + im*i, exact.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussInt conj() const { return {re, checked_neg(im)}; }

    // re^2 + im^2, the field norm down to the rationals.
    std::int64_t norm() const { return checked_add(checked_mul(re, re), checked_mul(im, im)); }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    bool divisible_by(std::int64_t d) const { return re % d == 0 && im % d == 0; }

    GaussInt div_exact(std::int64_t d) const {
        if (!divisible_by(d)) throw std::domain_error("GaussInt: inexact division");
        return {re / d, im / d};
    }

    std::string str() const;

    friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

inline GaussInt operator+(const GaussInt& x, const GaussInt& y) {
    return {checked_add(x.re, y.re), checked_add(x.im, y.im)};
}

inline GaussInt operator-(const GaussInt& x, const GaussInt& y) {
    return {checked_sub(x.re, y.re), checked_sub(x.im, y.im)};
}

inline GaussInt operator-(const GaussInt& x) { return {checked_neg(x.re), checked_neg(x.im)}; }

inline GaussInt operator*(const GaussInt& x, const GaussInt& y) {
    return {checked_sub(checked_mul(x.re, y.re), checked_mul(x.im, y.im)),
            checked_add(checked_mul(x.re, y.im), checked_mul(x.im, y.re))};
}

// a.re*b.re + a.im*b.im, the real part of a * conj(b).
inline std::int64_t dot(const GaussInt& a, const GaussInt& b) {
    return checked_add(checked_mul(a.re, b.re), checked_mul(a.im, b.im));
}

}  // namespace stsc
