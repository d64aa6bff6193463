/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

// AVX2 variants of the byte kernels. This translation unit is compiled with
// -mavx2; nothing here may run unless the runtime cpuid check passes.

#include "cbrw/kernels.hpp"

#if defined(__AVX2__) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace cbrw::kernels {
namespace {

void xor_bytes_avx2(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                    std::size_t n) {
    std::size_t p = 0;
    for (; p + 32 <= n; p += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + p));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + p));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + p), _mm256_xor_si256(va, vb));
    }
    for (; p < n; ++p)
        dst[p] = static_cast<std::uint8_t>(a[p] ^ b[p]);
}

void xor_invert_bytes_avx2(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                           std::size_t n) {
    const __m256i ones = _mm256_set1_epi8(-1);
    std::size_t p = 0;
    for (; p + 32 <= n; p += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + p));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + p));
        const __m256i x = _mm256_xor_si256(_mm256_xor_si256(va, vb), ones);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + p), x);
    }
    for (; p < n; ++p)
        dst[p] = static_cast<std::uint8_t>(~(a[p] ^ b[p]));
}

void walk_add_bytes_avx2(std::uint8_t* dst, const std::uint8_t* src, const std::uint32_t* step,
                         std::size_t n) {
    // Gathered indices are computed in signed 32-bit lanes; q = p + step[p]
    // stays below 2n, so anything up to 2^30 pixels is safe.
    if (n > (std::size_t{1} << 30)) {
        for (std::size_t p = 0; p < n; ++p) {
            std::size_t q = p + step[p];
            if (q >= n)
                q -= n;
            dst[p] = static_cast<std::uint8_t>((static_cast<unsigned>(src[p]) + src[q]) & 0xFF);
        }
        return;
    }

    // Widened copy so the gather reads whole 32-bit elements instead of
    // running past the end of the byte buffer.
    std::vector<std::uint32_t> wide(n);
    for (std::size_t i = 0; i < n; ++i)
        wide[i] = src[i];

    const __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
    const __m256i vn_minus1 = _mm256_set1_epi32(static_cast<int>(n) - 1);
    const __m256i mask_ff = _mm256_set1_epi32(0xFF);

    std::size_t p = 0;
    for (; p + 8 <= n; p += 8) {
        const __m256i vp = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(p)), iota);
        const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(step + p));
        __m256i vq = _mm256_add_epi32(vp, vs);
        const __m256i past_end = _mm256_cmpgt_epi32(vq, vn_minus1);
        vq = _mm256_sub_epi32(vq, _mm256_and_si256(past_end, vn));

        const __m256i gathered =
            _mm256_i32gather_epi32(reinterpret_cast<const int*>(wide.data()), vq, 4);
        const __m256i here =
            _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(src + p)));
        const __m256i sum = _mm256_and_si256(_mm256_add_epi32(here, gathered), mask_ff);

        const __m128i lo = _mm256_castsi256_si128(sum);
        const __m128i hi = _mm256_extracti128_si256(sum, 1);
        const __m128i packed16 = _mm_packus_epi32(lo, hi);
        const __m128i packed8 = _mm_packus_epi16(packed16, packed16);
        _mm_storel_epi64(reinterpret_cast<__m128i*>(dst + p), packed8);
    }
    for (; p < n; ++p) {
        std::size_t q = p + step[p];
        if (q >= n)
            q -= n;
        dst[p] = static_cast<std::uint8_t>((static_cast<unsigned>(src[p]) + src[q]) & 0xFF);
    }
}

std::uint64_t hsum_epi64(__m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    const __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

std::uint64_t hsum_epu32(__m256i v) {
    const __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v));
    const __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1));
    return hsum_epi64(_mm256_add_epi64(lo, hi));
}

PairSums pair_sums_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    PairSums s;

    const __m256i zero = _mm256_setzero_si256();
    __m256i acc_a = zero;       // sad lanes, u64
    __m256i acc_b = zero;       // sad lanes, u64
    __m256i acc_absdiff = zero; // sad lanes, u64
    __m256i acc_aa = zero;      // madd lanes, i32
    __m256i acc_bb = zero;
    __m256i acc_ab = zero;
    __m256i acc_sq = zero;

    // Each 32-byte block adds at most 2*130050 per i32 lane; flushing every
    // 4096 blocks keeps the lanes below 2^31.
    constexpr std::size_t kFlushBlocks = 4096;

    std::size_t p = 0;
    std::size_t blocks_since_flush = 0;
    const auto flush32 = [&] {
        s.sum_aa += hsum_epu32(acc_aa);
        s.sum_bb += hsum_epu32(acc_bb);
        s.sum_ab += hsum_epu32(acc_ab);
        s.sum_sqdiff += hsum_epu32(acc_sq);
        acc_aa = acc_bb = acc_ab = acc_sq = zero;
        blocks_since_flush = 0;
    };

    for (; p + 32 <= n; p += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + p));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + p));

        acc_a = _mm256_add_epi64(acc_a, _mm256_sad_epu8(va, zero));
        acc_b = _mm256_add_epi64(acc_b, _mm256_sad_epu8(vb, zero));
        acc_absdiff = _mm256_add_epi64(acc_absdiff, _mm256_sad_epu8(va, vb));

        const auto eq_mask = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        s.diff_count += 32 - std::popcount(eq_mask);

        // Zero-extended 16-bit lanes; interleaving order does not matter for
        // the sums.
        const __m256i a_lo = _mm256_unpacklo_epi8(va, zero);
        const __m256i a_hi = _mm256_unpackhi_epi8(va, zero);
        const __m256i b_lo = _mm256_unpacklo_epi8(vb, zero);
        const __m256i b_hi = _mm256_unpackhi_epi8(vb, zero);

        acc_aa = _mm256_add_epi32(acc_aa, _mm256_madd_epi16(a_lo, a_lo));
        acc_aa = _mm256_add_epi32(acc_aa, _mm256_madd_epi16(a_hi, a_hi));
        acc_bb = _mm256_add_epi32(acc_bb, _mm256_madd_epi16(b_lo, b_lo));
        acc_bb = _mm256_add_epi32(acc_bb, _mm256_madd_epi16(b_hi, b_hi));
        acc_ab = _mm256_add_epi32(acc_ab, _mm256_madd_epi16(a_lo, b_lo));
        acc_ab = _mm256_add_epi32(acc_ab, _mm256_madd_epi16(a_hi, b_hi));

        const __m256i d_lo = _mm256_sub_epi16(a_lo, b_lo);
        const __m256i d_hi = _mm256_sub_epi16(a_hi, b_hi);
        acc_sq = _mm256_add_epi32(acc_sq, _mm256_madd_epi16(d_lo, d_lo));
        acc_sq = _mm256_add_epi32(acc_sq, _mm256_madd_epi16(d_hi, d_hi));

        if (++blocks_since_flush == kFlushBlocks)
            flush32();
    }
    flush32();

    s.sum_a += hsum_epi64(acc_a);
    s.sum_b += hsum_epi64(acc_b);
    s.sum_absdiff += hsum_epi64(acc_absdiff);

    for (; p < n; ++p) {
        const std::uint32_t va = a[p];
        const std::uint32_t vb = b[p];
        s.sum_a += va;
        s.sum_b += vb;
        s.sum_aa += va * va;
        s.sum_bb += vb * vb;
        s.sum_ab += va * vb;
        const std::uint32_t d = va > vb ? va - vb : vb - va;
        s.sum_absdiff += d;
        s.sum_sqdiff += d * d;
        s.diff_count += (va != vb) ? 1 : 0;
    }
    return s;
}

constexpr KernelTable kAvx2 = {
    "avx2",
    xor_bytes_avx2,
    xor_invert_bytes_avx2,
    walk_add_bytes_avx2,
    pair_sums_avx2,
};

} // namespace

const KernelTable* avx2_table() {
    return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

} // namespace cbrw::kernels

#else

namespace cbrw::kernels {

const KernelTable* avx2_table() {
    return nullptr;
}

} // namespace cbrw::kernels

#endif
