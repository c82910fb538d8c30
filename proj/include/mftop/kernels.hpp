/* kernels.hpp -- elementwise kernels over grade-numerator buffers.
 *
 * Every lattice operation in the library reduces to one of four loops over
 * contiguous uint32 buffers: pointwise min, pointwise max, complement
 * against a fixed denominator, and an all-lanes <= test.  A scalar
 * reference implementation is always available; on x86-64 an AVX2 variant
 * is selected at runtime, on aarch64 a NEON variant.  The variants are
 * equivalence-tested against the scalar kernels (tests/test_kernels.cpp).
 */
#pragma once

#include <cstddef>
#include <cstdint>

namespace mftop::kernels {

/// Table of kernel entry points for one backend.
struct Ops {
    void (*min_into)(const std::uint32_t* a, const std::uint32_t* b,
                     std::uint32_t* dst, std::size_t len);
    void (*max_into)(const std::uint32_t* a, const std::uint32_t* b,
                     std::uint32_t* dst, std::size_t len);
    // dst[i] = denom - src[i]; requires src[i] <= denom.
    void (*complement_into)(const std::uint32_t* src, std::uint32_t denom,
                            std::uint32_t* dst, std::size_t len);
    // true iff a[i] <= b[i] for every lane.
    bool (*all_leq)(const std::uint32_t* a, const std::uint32_t* b,
                    std::size_t len);
    const char* name;
};

/// Portable reference kernels.
const Ops& scalar_ops();

/// Kernels selected for this process: the widest supported SIMD variant,
/// unless the MFTOP_KERNEL environment variable ("scalar", "avx2", "neon")
/// forces a backend.  Resolved once, on first use.
const Ops& active_ops();

/// True when the AVX2 translation unit is linked and the CPU supports it.
bool avx2_available();

#if defined(MFTOP_HAVE_AVX2_TU)
const Ops& avx2_ops();
#endif
#if defined(MFTOP_HAVE_NEON_TU)
const Ops& neon_ops();
#endif

} // namespace mftop::kernels
