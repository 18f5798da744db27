#include <cstdlib>
#include <cstring>

#include "nids/kernels.hpp"

namespace nids::kern {

const KernelTable* kernels_neon();  // defined in kernels_neon.cpp

namespace {

const KernelTable* pick() {
    const char* force = std::getenv("NIDS_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return &kernels_scalar();
#if defined(__x86_64__) || defined(_M_X64)
    if (const KernelTable* t = kernels_avx2()) {
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
            if (!force || std::strcmp(force, "avx2") == 0) return t;
        }
    }
#endif
#if defined(__aarch64__)
    if (const KernelTable* t = kernels_neon()) return t;
#endif
    return &kernels_scalar();
}

}  // namespace

const KernelTable& kernels() {
    static const KernelTable* t = pick();
    return *t;
}

}  // namespace nids::kern
