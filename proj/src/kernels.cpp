/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/kernels.hpp"

#include <cstdlib>
#include <string>

namespace cbrw::kernels {

// Implemented in kernels_avx2.cpp / kernels_neon.cpp. Each returns nullptr
// when the host cannot execute the variant.
const KernelTable* avx2_table();
const KernelTable* neon_table();

namespace {

void xor_bytes_scalar(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                      std::size_t n) {
    for (std::size_t p = 0; p < n; ++p)
        dst[p] = static_cast<std::uint8_t>(a[p] ^ b[p]);
}

void xor_invert_bytes_scalar(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                             std::size_t n) {
    for (std::size_t p = 0; p < n; ++p)
        dst[p] = static_cast<std::uint8_t>(~(a[p] ^ b[p]));
}

void walk_add_bytes_scalar(std::uint8_t* dst, const std::uint8_t* src, const std::uint32_t* step,
                           std::size_t n) {
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t q = p + step[p];
        if (q >= n)
            q -= n;
        dst[p] = static_cast<std::uint8_t>((static_cast<unsigned>(src[p]) + src[q]) & 0xFF);
    }
}

PairSums pair_sums_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    PairSums s;
    for (std::size_t p = 0; p < n; ++p) {
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

constexpr KernelTable kScalar = {
    "scalar",
    xor_bytes_scalar,
    xor_invert_bytes_scalar,
    walk_add_bytes_scalar,
    pair_sums_scalar,
};

const KernelTable& pick_active() {
    const std::vector<const KernelTable*> tables = available();
    if (const char* want = std::getenv("CBRW_KERNELS")) {
        for (const KernelTable* t : tables) {
            if (std::string(want) == t->name)
                return *t;
        }
        // Unknown or unavailable name: fall through to the default choice.
    }
    return *tables.back();
}

} // namespace

const KernelTable& scalar() {
    return kScalar;
}

std::vector<const KernelTable*> available() {
    std::vector<const KernelTable*> tables{&kScalar};
    if (const KernelTable* t = neon_table())
        tables.push_back(t);
    if (const KernelTable* t = avx2_table())
        tables.push_back(t);
    return tables;
}

const KernelTable& active() {
    static const KernelTable& table = pick_active();
    return table;
}

} // namespace cbrw::kernels
