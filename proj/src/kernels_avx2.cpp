// AVX2 (256-bit, 4 words per step) variants of the word kernels.
// Population counts use the nibble lookup-table method with byte-wise
// accumulation via _mm256_sad_epu8. Tails fall through to scalar code.
// Compiled with -mavx2; callers reach it only through kern::active().

#include "chroma/kernels.hpp"

#if defined(CHROMA_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace chroma::kern {

namespace {

constexpr std::size_t LANE = 4; // 64-bit words per 256-bit vector

inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::uint64_t hsum_sad(__m256i acc) {
    __m256i sums = _mm256_sad_epu8(acc, _mm256_setzero_si256());
    return static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 3));
}

std::uint64_t and_count_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + LANE <= nw; i += LANE) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        total += hsum_sad(popcount_bytes(_mm256_and_si256(va, vb)));
    }
    for (; i < nw; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t nw) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + LANE <= nw; i += LANE) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        total += hsum_sad(popcount_bytes(va));
    }
    for (; i < nw; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

void and_into_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + LANE <= nw; i += LANE) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
    }
    for (; i < nw; ++i) dst[i] = a[i] & b[i];
}

void or_into_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + LANE <= nw; i += LANE) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(va, vb));
    }
    for (; i < nw; ++i) dst[i] = a[i] | b[i];
}

void andnot_into_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + LANE <= nw; i += LANE) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // _mm256_andnot_si256(x, y) = ~x & y
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(vb, va));
    }
    for (; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

bool is_subset_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + LANE <= nw; i += LANE) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i stray = _mm256_andnot_si256(vb, va);
        if (!_mm256_testz_si256(stray, stray)) return false;
    }
    for (; i < nw; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

} // namespace

const Ops avx2_ops = {
    and_count_avx2, popcount_avx2,    and_into_avx2,
    or_into_avx2,   andnot_into_avx2, is_subset_avx2,
    "avx2",
};

} // namespace chroma::kern

#endif // CHROMA_HAVE_AVX2
