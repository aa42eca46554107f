#include <cstdlib>
#include <string_view>

#include "hankel/kernels.hpp"

namespace hankel::kernels {

const KernelSet& scalar_kernels() noexcept {
    static const KernelSet set{"scalar", &detail::prime_axpy_scalar, &detail::char2_axpy_scalar};
    return set;
}

const KernelSet* avx2_kernels() noexcept {
#if defined(HANKEL_HAVE_AVX2_KERNELS)
    static const KernelSet set{"avx2", &detail::prime_axpy_avx2, &detail::char2_axpy_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &set : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet& active_kernels() noexcept {
    static const KernelSet& chosen = []() -> const KernelSet& {
        const char* env = std::getenv("HANKEL_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") {
            return scalar_kernels();
        }
        if (const KernelSet* avx2 = avx2_kernels()) {
            return *avx2;
        }
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace hankel::kernels
