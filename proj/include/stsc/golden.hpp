#pragma once

#include <complex>

#include "stsc/gaussint.hpp"

namespace stsc {

// Element a + b*theta of Z[i][theta], theta = (1+sqrt5)/2, theta^2 = theta + 1.
// The (1, theta) basis is the only stored representation; the conjugate root
// thetabar = 1 - theta never appears as a coordinate.
struct GoldenElem {
    GaussInt a;  // unit coordinate
    GaussInt b;  // theta coordinate

    constexpr GoldenElem() = default;
    constexpr GoldenElem(GaussInt a_, GaussInt b_) : a(a_), b(b_) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const GoldenElem&, const GoldenElem&) = default;
};

inline GoldenElem operator+(const GoldenElem& x, const GoldenElem& y) {
    return {x.a + y.a, x.b + y.b};
}

inline GoldenElem operator-(const GoldenElem& x, const GoldenElem& y) {
    return {x.a - y.a, x.b - y.b};
}

inline GoldenElem operator-(const GoldenElem& x) { return {-x.a, -x.b}; }

// (a+b*th)(c+d*th) = (ac+bd) + (ad+bc+bd)*th, via th^2 = th + 1.
GoldenElem golden_mul(const GoldenElem& x, const GoldenElem& y);

inline GoldenElem operator*(const GoldenElem& x, const GoldenElem& y) { return golden_mul(x, y); }

// Gaussian-integer scalar multiple.
inline GoldenElem operator*(const GaussInt& s, const GoldenElem& x) {
    return {s * x.a, s * x.b};
}

// Galois conjugation theta -> 1 - theta, re-expressed in the (1, theta)
// basis: (a, b) -> (a + b, -b). Has order 2.
GoldenElem tau(const GoldenElem& x);

// Canonical embedding theta -> (1+sqrt5)/2 in double precision.
std::complex<double> embed(const GoldenElem& x);

// Conjugate real embedding theta -> (1-sqrt5)/2; equals embed(tau(x)).
std::complex<double> embed_conj(const GoldenElem& x);

// x * tau(x). The product always has zero theta coordinate; a nonzero one
// indicates an arithmetic bug and throws.
GaussInt relative_norm(const GoldenElem& x);

// |embed(x)|^2 written exactly as unit + golden*phi with integer parts.
struct EmbedAbs2 {
    std::int64_t unit = 0;
    std::int64_t golden = 0;

    double value() const;

    EmbedAbs2 operator+(const EmbedAbs2& o) const {
        return {checked_add(unit, o.unit), checked_add(golden, o.golden)};
    }
    bool is_zero() const { return unit == 0 && golden == 0; }
};

EmbedAbs2 embed_abs2(const GoldenElem& x);

// Exact division by 2*theta - 1 (which embeds to sqrt5). Throws when the
// quotient is not in Z[i][theta].
bool divisible_by_sqrt5(const GoldenElem& x);
GoldenElem div_sqrt5(const GoldenElem& x);

inline constexpr GoldenElem golden_theta() { return {GaussInt{0, 0}, GaussInt{1, 0}}; }

// Code-entry multiplier alpha = (1+i) - i*theta; relative_norm(alpha) = 2+i.
inline constexpr GoldenElem golden_alpha() { return {GaussInt{1, 1}, GaussInt{0, -1}}; }

inline constexpr double kGoldenRatio = 1.6180339887498948482;

}  // namespace stsc
