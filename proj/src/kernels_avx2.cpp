#include "summand/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// Shoup modular multiplication in 32-bit lanes. For a fixed multiplier
// a < p < 2^31 precompute a_pre = floor(a * 2^32 / p); then for any x < p
//
//     q = (a_pre * x) >> 32        (underestimates floor(a*x/p) by at most 1)
//     r = a*x - q*p                (fits in 32 bits since r < 2p < 2^32)
//
// and one conditional subtract lands r in [0, p). The conditional subtract
// is branch-free: min_epu32(r, r - p) picks r when r < p (the subtraction
// wraps to a huge value) and r - p otherwise.

namespace summand::kern {

namespace {

inline __m256i mulhi32(__m256i x, __m256i m) {
    // high 32 bits of the eight 32x32 products
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
    return _mm256_blend_epi32(even, odd, 0xAA);
}

inline __m256i reduce_once(__m256i v, __m256i p) {
    return _mm256_min_epu32(v, _mm256_sub_epi32(v, p));
}

}  // namespace

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p) {
    if (a == 0) return;
    const std::uint32_t a_pre =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) << 32) / p);
    const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i prev = _mm256_set1_epi32(static_cast<int>(a_pre));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<__m256i*>(
            const_cast<std::uint32_t*>(y + i)));
        __m256i q = mulhi32(xv, prev);
        __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(xv, av),
                                     _mm256_mullo_epi32(q, pv));
        r = reduce_once(r, pv);
        yv = reduce_once(_mm256_add_epi32(yv, r), pv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), yv);
    }
    for (; i < n; ++i) {
        std::uint64_t q = (static_cast<std::uint64_t>(a_pre) * x[i]) >> 32;
        std::uint32_t r = a * x[i] - static_cast<std::uint32_t>(q) * p;
        if (r >= p) r -= p;
        std::uint32_t s = y[i] + r;
        y[i] = s >= p ? s - p : s;
    }
}

void scale_avx2(std::uint32_t* y, std::size_t n, std::uint32_t a,
                std::uint32_t p) {
    const std::uint32_t a_pre =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) << 32) / p);
    const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i prev = _mm256_set1_epi32(static_cast<int>(a_pre));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i q = mulhi32(yv, prev);
        __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(yv, av),
                                     _mm256_mullo_epi32(q, pv));
        r = reduce_once(r, pv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
    }
    for (; i < n; ++i) {
        std::uint64_t q = (static_cast<std::uint64_t>(a_pre) * y[i]) >> 32;
        std::uint32_t r = a * y[i] - static_cast<std::uint32_t>(q) * p;
        y[i] = r >= p ? r - p : r;
    }
}

}  // namespace summand::kern

#endif  // x86_64
