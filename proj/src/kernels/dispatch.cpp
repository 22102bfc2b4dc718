#include "stsc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace stsc::kernels {

#if defined(STSC_WITH_AVX2) && defined(__x86_64__)
namespace detail {
const KernelSet& avx2_kernel_set();
}

const KernelSet* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    return &detail::avx2_kernel_set();
}
#else
const KernelSet* avx2_kernels() { return nullptr; }
#endif

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> out{&scalar_kernels()};
    if (const KernelSet* avx2 = avx2_kernels()) out.push_back(avx2);
    return out;
}

const KernelSet& kernels_by_name(std::string_view name) {
    if (name == "scalar") return scalar_kernels();
    if (name == "avx2") {
        if (const KernelSet* avx2 = avx2_kernels()) return *avx2;
        throw std::runtime_error("STSC_KERNEL=avx2 requested but AVX2 is unavailable");
    }
    if (name == "auto") {
        if (const KernelSet* avx2 = avx2_kernels()) return *avx2;
        return scalar_kernels();
    }
    throw std::runtime_error("unknown kernel set: " + std::string(name));
}

const KernelSet& active_kernels() {
    static const KernelSet& chosen = []() -> const KernelSet& {
        const char* env = std::getenv("STSC_KERNEL");
        return kernels_by_name(env != nullptr ? env : "auto");
    }();
    return chosen;
}

}  // namespace stsc::kernels
