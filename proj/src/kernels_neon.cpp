/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

// NEON variants for aarch64, where NEON is baseline. The walk kernel stays
// scalar: NEON has no gather.

#include "cbrw/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace cbrw::kernels {
namespace {

void xor_bytes_neon(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                    std::size_t n) {
    std::size_t p = 0;
    for (; p + 16 <= n; p += 16)
        vst1q_u8(dst + p, veorq_u8(vld1q_u8(a + p), vld1q_u8(b + p)));
    for (; p < n; ++p)
        dst[p] = static_cast<std::uint8_t>(a[p] ^ b[p]);
}

void xor_invert_bytes_neon(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                           std::size_t n) {
    std::size_t p = 0;
    for (; p + 16 <= n; p += 16)
        vst1q_u8(dst + p, vmvnq_u8(veorq_u8(vld1q_u8(a + p), vld1q_u8(b + p))));
    for (; p < n; ++p)
        dst[p] = static_cast<std::uint8_t>(~(a[p] ^ b[p]));
}

void walk_add_bytes_neon(std::uint8_t* dst, const std::uint8_t* src, const std::uint32_t* step,
                         std::size_t n) {
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t q = p + step[p];
        if (q >= n)
            q -= n;
        dst[p] = static_cast<std::uint8_t>((static_cast<unsigned>(src[p]) + src[q]) & 0xFF);
    }
}

PairSums pair_sums_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    PairSums s;
    const uint8x16_t one = vdupq_n_u8(1);

    std::size_t p = 0;
    for (; p + 16 <= n; p += 16) {
        const uint8x16_t va = vld1q_u8(a + p);
        const uint8x16_t vb = vld1q_u8(b + p);

        s.sum_a += vaddlvq_u8(va);
        s.sum_b += vaddlvq_u8(vb);

        const uint8x16_t ad = vabdq_u8(va, vb);
        s.sum_absdiff += vaddlvq_u8(ad);
        s.diff_count += 16 - vaddlvq_u8(vandq_u8(vceqq_u8(va, vb), one));

        const uint8x8_t a_lo = vget_low_u8(va), a_hi = vget_high_u8(va);
        const uint8x8_t b_lo = vget_low_u8(vb), b_hi = vget_high_u8(vb);
        const uint8x8_t d_lo = vget_low_u8(ad), d_hi = vget_high_u8(ad);

        s.sum_aa += vaddlvq_u16(vmull_u8(a_lo, a_lo));
        s.sum_aa += vaddlvq_u16(vmull_u8(a_hi, a_hi));
        s.sum_bb += vaddlvq_u16(vmull_u8(b_lo, b_lo));
        s.sum_bb += vaddlvq_u16(vmull_u8(b_hi, b_hi));
        s.sum_ab += vaddlvq_u16(vmull_u8(a_lo, b_lo));
        s.sum_ab += vaddlvq_u16(vmull_u8(a_hi, b_hi));
        // (a-b)^2 == |a-b|^2
        s.sum_sqdiff += vaddlvq_u16(vmull_u8(d_lo, d_lo));
        s.sum_sqdiff += vaddlvq_u16(vmull_u8(d_hi, d_hi));
    }
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

constexpr KernelTable kNeon = {
    "neon",
    xor_bytes_neon,
    xor_invert_bytes_neon,
    walk_add_bytes_neon,
    pair_sums_neon,
};

} // namespace

const KernelTable* neon_table() {
    return &kNeon;
}

} // namespace cbrw::kernels

#else

namespace cbrw::kernels {

const KernelTable* neon_table() {
    return nullptr;
}

} // namespace cbrw::kernels

#endif
