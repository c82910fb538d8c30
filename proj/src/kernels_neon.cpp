/* kernels_neon.cpp -- NEON variants of the grade-buffer kernels (aarch64). */
#include "mftop/kernels.hpp"

#include <arm_neon.h>

namespace mftop::kernels {

namespace {

void min_into(const std::uint32_t* a, const std::uint32_t* b,
              std::uint32_t* dst, std::size_t len) {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        vst1q_u32(dst + i, vminq_u32(vld1q_u32(a + i), vld1q_u32(b + i)));
    for (; i < len; ++i) dst[i] = a[i] < b[i] ? a[i] : b[i];
}

void max_into(const std::uint32_t* a, const std::uint32_t* b,
              std::uint32_t* dst, std::size_t len) {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        vst1q_u32(dst + i, vmaxq_u32(vld1q_u32(a + i), vld1q_u32(b + i)));
    for (; i < len; ++i) dst[i] = a[i] > b[i] ? a[i] : b[i];
}

void complement_into(const std::uint32_t* src, std::uint32_t denom,
                     std::uint32_t* dst, std::size_t len) {
    const uint32x4_t vd = vdupq_n_u32(denom);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        vst1q_u32(dst + i, vsubq_u32(vd, vld1q_u32(src + i)));
    for (; i < len; ++i) dst[i] = denom - src[i];
}

bool all_leq(const std::uint32_t* a, const std::uint32_t* b, std::size_t len) {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        uint32x4_t ok = vcleq_u32(vld1q_u32(a + i), vld1q_u32(b + i));
        if (vminvq_u32(ok) == 0) return false;
    }
    for (; i < len; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

const Ops& neon_ops() {
    static const Ops ops{&min_into, &max_into, &complement_into, &all_leq,
                         "neon"};
    return ops;
}

} // namespace mftop::kernels
