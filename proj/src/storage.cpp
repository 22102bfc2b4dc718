#include "stsc/storage.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsc {

StorageSystem encode_storage(const std::vector<Bits>& data_fragments) {
    if (data_fragments.empty()) throw std::invalid_argument("encode_storage: need at least one data fragment");
    const std::size_t m = data_fragments.front().size();
    for (const auto& f : data_fragments)
        if (f.size() != m) throw std::invalid_argument("encode_storage: fragment length mismatch");

    const int k = static_cast<int>(data_fragments.size());
    StorageSystem sys{k + 1, k, k, {}};
    Bits parity(m, 0);
    for (int i = 0; i < k; ++i) {
        sys.fragments.push_back({i + 1, data_fragments[i]});
        parity = xor_bits(parity, data_fragments[i]);
    }
    sys.fragments.push_back({k + 1, parity});
    return sys;
}

Fragment repair(const std::vector<Bits>& helper_fragments, int failed_id, int d) {
    if (static_cast<int>(helper_fragments.size()) != d)
        throw std::invalid_argument("repair: expected exactly d helper fragments");
    if (d < 1) throw std::invalid_argument("repair: d must be >= 1");
    if (failed_id < 1 || failed_id > d + 1) throw std::invalid_argument("repair: failed_id out of range");
    Bits acc(helper_fragments.front().size(), 0);
    for (const auto& h : helper_fragments) acc = xor_bits(acc, h);
    return {failed_id, acc};
}

std::vector<Bits> reconstruct(const std::vector<Fragment>& fragments, int n) {
    const int k = n - 1;
    if (n < 2) throw std::invalid_argument("reconstruct: n must be >= 2");
    if (static_cast<int>(fragments.size()) != k)
        throw std::invalid_argument("reconstruct: need exactly k = n-1 fragments");

    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    const std::size_t m = fragments.front().bits.size();
    for (const auto& f : fragments) {
        if (f.node_id < 1 || f.node_id > n) throw std::invalid_argument("reconstruct: node id out of range");
        if (seen[f.node_id]) throw std::invalid_argument("reconstruct: duplicate node id");
        seen[f.node_id] = true;
        if (f.bits.size() != m) throw std::invalid_argument("reconstruct: fragment length mismatch");
    }

    std::vector<Bits> data(k);
    if (!seen[n]) {
        for (const auto& f : fragments) data[f.node_id - 1] = f.bits;
        return data;
    }
    // Parity node present: the one absent data fragment is the XOR of
    // everything we have.
    int missing = 0;
    for (int i = 1; i <= k; ++i)
        if (!seen[i]) missing = i;
    Bits acc(m, 0);
    for (const auto& f : fragments) {
        acc = xor_bits(acc, f.bits);
        if (f.node_id != n) data[f.node_id - 1] = f.bits;
    }
    data[missing - 1] = acc;
    return data;
}

}  // namespace stsc
