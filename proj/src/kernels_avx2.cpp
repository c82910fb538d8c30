/* kernels_avx2.cpp -- AVX2 variants of the grade-buffer kernels.
 * Compiled with -mavx2; only dispatched to when the CPU reports AVX2.
 */
#include "mftop/kernels.hpp"

#include <immintrin.h>

namespace mftop::kernels {

namespace {

void min_into(const std::uint32_t* a, const std::uint32_t* b,
              std::uint32_t* dst, std::size_t len) {
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_min_epu32(va, vb));
    }
    for (; i < len; ++i) dst[i] = a[i] < b[i] ? a[i] : b[i];
}

void max_into(const std::uint32_t* a, const std::uint32_t* b,
              std::uint32_t* dst, std::size_t len) {
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_max_epu32(va, vb));
    }
    for (; i < len; ++i) dst[i] = a[i] > b[i] ? a[i] : b[i];
}

void complement_into(const std::uint32_t* src, std::uint32_t denom,
                     std::uint32_t* dst, std::size_t len) {
    const __m256i vd = _mm256_set1_epi32(static_cast<int>(denom));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_sub_epi32(vd, vs));
    }
    for (; i < len; ++i) dst[i] = denom - src[i];
}

bool all_leq(const std::uint32_t* a, const std::uint32_t* b, std::size_t len) {
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // a <= b  <=>  min(a, b) == a, lane-wise.
        __m256i ok = _mm256_cmpeq_epi32(_mm256_min_epu32(va, vb), va);
        if (_mm256_movemask_epi8(ok) != -1) return false;
    }
    for (; i < len; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{&min_into, &max_into, &complement_into, &all_leq,
                         "avx2"};
    return ops;
}

} // namespace mftop::kernels
