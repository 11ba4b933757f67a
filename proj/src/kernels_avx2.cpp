/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/kernels.h>

#if defined(HBEQ_HAVE_AVX2)

#include <immintrin.h>

// Only the functions in this file carry the avx2 target attribute; the
// translation unit itself is compiled for the baseline ISA so nothing
// inlined from headers can leak AVX2 instructions into shared code.
#define HBEQ_AVX2 __attribute__((target("avx2")))

namespace hbeq::simd {
namespace {

constexpr std::uint64_t kHigh = ~std::uint64_t{63};

HBEQ_AVX2 inline __m256i word_index_vector(std::size_t w) {
    const auto base = static_cast<long long>(w);
    return _mm256_set_epi64x(base + 3, base + 2, base + 1, base + 0);
}

// All-ones lanes where the high atoms of (w << 6) satisfy the clause.
HBEQ_AVX2 inline __m256i clause_high(__m256i idx, __m256i pos_hi, __m256i neg_hi) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ones = _mm256_set1_epi64x(-1);
    const __m256i z    = _mm256_slli_epi64(idx, 6);
    const __m256i p    = _mm256_cmpeq_epi64(_mm256_and_si256(z, pos_hi), zero);
    const __m256i n    = _mm256_cmpeq_epi64(_mm256_andnot_si256(z, neg_hi), zero);
    // satisfied unless both tests found nothing
    return _mm256_xor_si256(_mm256_and_si256(p, n), ones);
}

// All-ones lanes where the high atoms of (w << 6) agree with the cube.
HBEQ_AVX2 inline __m256i cube_high(__m256i idx, __m256i value, __m256i fixed_hi) {
    const __m256i z = _mm256_slli_epi64(idx, 6);
    return _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_xor_si256(z, value), fixed_hi), _mm256_setzero_si256());
}

HBEQ_AVX2 void fill_clause(std::uint64_t* out, std::size_t words, unsigned width, std::uint64_t pos,
                           std::uint64_t neg) {
    const std::uint64_t low = detail::clause_low(pos, neg);
    if (words < 4) {
        scalar_kernels().fill_clause(out, words, width, pos, neg);
        return;
    }
    const __m256i lowv   = _mm256_set1_epi64x(static_cast<long long>(low));
    const __m256i pos_hi = _mm256_set1_epi64x(static_cast<long long>(pos & kHigh));
    const __m256i neg_hi = _mm256_set1_epi64x(static_cast<long long>(neg & kHigh));
    for (std::size_t w = 0; w < words; w += 4) {
        const __m256i sat = clause_high(word_index_vector(w), pos_hi, neg_hi);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), _mm256_or_si256(sat, lowv));
    }
}

HBEQ_AVX2 void and_clause(std::uint64_t* inout, std::size_t words, unsigned width, std::uint64_t pos,
                          std::uint64_t neg) {
    if (words < 4) {
        scalar_kernels().and_clause(inout, words, width, pos, neg);
        return;
    }
    const std::uint64_t low = detail::clause_low(pos, neg);
    if (low == ~std::uint64_t{0}) return;
    const __m256i lowv   = _mm256_set1_epi64x(static_cast<long long>(low));
    const __m256i pos_hi = _mm256_set1_epi64x(static_cast<long long>(pos & kHigh));
    const __m256i neg_hi = _mm256_set1_epi64x(static_cast<long long>(neg & kHigh));
    for (std::size_t w = 0; w < words; w += 4) {
        auto* p           = reinterpret_cast<__m256i*>(inout + w);
        const __m256i sat = clause_high(word_index_vector(w), pos_hi, neg_hi);
        _mm256_storeu_si256(p, _mm256_and_si256(_mm256_loadu_si256(p), _mm256_or_si256(sat, lowv)));
    }
}

HBEQ_AVX2 void and_table(std::uint64_t* inout, const std::uint64_t* other, std::size_t words) {
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        auto* p = reinterpret_cast<__m256i*>(inout + w);
        const __m256i o = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(other + w));
        _mm256_storeu_si256(p, _mm256_and_si256(_mm256_loadu_si256(p), o));
    }
    for (; w < words; ++w) inout[w] &= other[w];
}

HBEQ_AVX2 bool any_in_cube(const std::uint64_t* a, const std::uint64_t* b, std::size_t words, Cube in,
                           Cube out) {
    if (words < 4) return scalar_kernels().any_in_cube(a, b, words, in, out);
    const std::uint64_t in_low  = detail::cube_low(in);
    const std::uint64_t out_low = detail::cube_low(out);
    if (in_low == 0) return false;
    const __m256i in_lowv   = _mm256_set1_epi64x(static_cast<long long>(in_low));
    const __m256i out_lowv  = _mm256_set1_epi64x(static_cast<long long>(out_low));
    const __m256i in_val    = _mm256_set1_epi64x(static_cast<long long>(in.value));
    const __m256i in_fixed  = _mm256_set1_epi64x(static_cast<long long>(in.fixed & kHigh));
    const __m256i out_val   = _mm256_set1_epi64x(static_cast<long long>(out.value));
    const __m256i out_fixed = _mm256_set1_epi64x(static_cast<long long>(out.fixed & kHigh));
    for (std::size_t w = 0; w < words; w += 4) {
        const __m256i idx  = word_index_vector(w);
        const __m256i inw  = _mm256_and_si256(cube_high(idx, in_val, in_fixed), in_lowv);
        const __m256i outw = _mm256_and_si256(cube_high(idx, out_val, out_fixed), out_lowv);
        __m256i v = _mm256_andnot_si256(outw, _mm256_and_si256(inw, _mm256_loadu_si256(
                                                                       reinterpret_cast<const __m256i*>(a + w))));
        if (b) v = _mm256_and_si256(v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w)));
        if (!_mm256_testz_si256(v, v)) return true;
    }
    return false;
}

} // namespace

const KernelSet* avx2_kernels() {
    static const KernelSet k{"avx2", fill_clause, and_clause, and_table, any_in_cube};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &k : nullptr;
}

} // namespace hbeq::simd

#else

namespace hbeq::simd {
const KernelSet* avx2_kernels() { return nullptr; }
} // namespace hbeq::simd

#endif
