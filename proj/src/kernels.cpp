/* kernels.cpp -- scalar reference kernels and runtime backend selection. */
#include "mftop/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace mftop::kernels {

namespace scalar {

static void min_into(const std::uint32_t* a, const std::uint32_t* b,
                     std::uint32_t* dst, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) dst[i] = std::min(a[i], b[i]);
}

static void max_into(const std::uint32_t* a, const std::uint32_t* b,
                     std::uint32_t* dst, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) dst[i] = std::max(a[i], b[i]);
}

static void complement_into(const std::uint32_t* src, std::uint32_t denom,
                            std::uint32_t* dst, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) dst[i] = denom - src[i];
}

static bool all_leq(const std::uint32_t* a, const std::uint32_t* b,
                    std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace scalar

const Ops& scalar_ops() {
    static const Ops ops{&scalar::min_into, &scalar::max_into,
                         &scalar::complement_into, &scalar::all_leq,
                         "scalar"};
    return ops;
}

bool avx2_available() {
#if defined(MFTOP_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

static const Ops& select_backend() {
    if (const char* forced = std::getenv("MFTOP_KERNEL")) {
        if (std::strcmp(forced, "scalar") == 0) return scalar_ops();
#if defined(MFTOP_HAVE_AVX2_TU)
        if (std::strcmp(forced, "avx2") == 0 && avx2_available())
            return avx2_ops();
#endif
#if defined(MFTOP_HAVE_NEON_TU)
        if (std::strcmp(forced, "neon") == 0) return neon_ops();
#endif
        return scalar_ops();
    }
#if defined(MFTOP_HAVE_AVX2_TU)
    if (avx2_available()) return avx2_ops();
#endif
#if defined(MFTOP_HAVE_NEON_TU)
    return neon_ops();
#else
    return scalar_ops();
#endif
}

const Ops& active_ops() {
    static const Ops& selected = select_backend();
    return selected;
}

} // namespace mftop::kernels
