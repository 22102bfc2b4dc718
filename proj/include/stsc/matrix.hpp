#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stsc {

template <class T>
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    friend bool operator==(const Mat&, const Mat&) = default;
};

using CMat = Mat<std::complex<double>>;

inline double fro_norm2(const CMat& m) {
    double s = 0.0;
    for (const auto& z : m.data) s += std::norm(z);
    return s;
}

inline CMat operator*(double s, const CMat& m) {
    CMat out = m;
    for (auto& z : out.data) z *= s;
    return out;
}

}  // namespace stsc
