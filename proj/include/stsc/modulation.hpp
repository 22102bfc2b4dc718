#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "stsc/bits.hpp"
#include "stsc/golden.hpp"

namespace stsc {

// Gray-mapped QAM constellation on the unnormalized integer grid.
// Points are stored in lexicographic bit-string order, which is also the
// tie-break order used by demap.
struct Constellation {
    int order = 0;
    std::vector<std::pair<Bits, std::complex<double>>> points;

    double average_energy() const;

    static const Constellation& qam4();
    static const Constellation& qam16();
};

// 2 bits -> {+-1 +-i}: 00 -> -1-i, 01 -> -1+i, 11 -> +1+i, 10 -> +1-i.
std::complex<double> gray4(const Bits& bits);

// 4 bits -> {+-1,+-3}^2, per-axis Gray code 00 -> -3, 01 -> -1, 11 -> +1,
// 10 -> +3; the first two bits select the real axis.
std::complex<double> gray16(const Bits& bits);

// 4 bits -> gray4(first half) + gray4(second half) * theta.
GoldenElem lift_golden(const Bits& bits);
Bits delift_golden(const GoldenElem& x);

// Nearest constellation point in Euclidean distance; ties go to the
// lexicographically smallest bit string.
Bits demap(const Constellation& c, std::complex<double> point);

}  // namespace stsc
