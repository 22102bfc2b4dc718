#pragma once

#include <vector>

#include "stsc/bits.hpp"

namespace stsc {

// One node's content in an (n, n-1) single-parity storage system.
struct Fragment {
    int node_id = 0;  // 1-based
    Bits bits;

    friend bool operator==(const Fragment&, const Fragment&) = default;
};

struct StorageSystem {
    int n = 0;  // node count
    int k = 0;  // data nodes, k = n-1
    int d = 0;  // repair degree, d = k
    std::vector<Fragment> fragments;
};

// Nodes 1..k store the data fragments; node n stores their XOR, so the XOR
// over all n fragments is zero.
StorageSystem encode_storage(const std::vector<Bits>& data_fragments);

// XOR of all d = n-1 surviving fragments recovers the lost one.
Fragment repair(const std::vector<Bits>& helper_fragments, int failed_id, int d);

// Recover data fragments 1..k from any k = n-1 distinct nodes. When the
// parity node is among the inputs the one missing data fragment is the XOR
// of everything provided.
std::vector<Bits> reconstruct(const std::vector<Fragment>& fragments, int n);

}  // namespace stsc
