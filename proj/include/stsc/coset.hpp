#pragma once

#include "stsc/bits.hpp"
#include "stsc/gaussint.hpp"

namespace stsc {

// Coset of the ideal (2^t) in Z[i], named by its canonical representative
// with 0 <= re, im < 2^t. There are exactly 2^(2t) cosets at level t.
struct CosetLabel {
    int t = 1;
    GaussInt rep;

    friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

// Bijection between bit strings of length 2t and the cosets of (2^t):
// the first t bits give re, the last t bits give im, both MSB first.
CosetLabel coset_encode(const Bits& bits);
Bits coset_decode(const CosetLabel& label);

// Canonical label of an arbitrary Gaussian integer at level t.
CosetLabel coset_label_of(const GaussInt& x, int t);

}  // namespace stsc
