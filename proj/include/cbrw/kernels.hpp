/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_KERNELS_HPP
#define CBRW_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cbrw::kernels {

// Exact integer statistics over one (a, b) plane pair, gathered in a single
// pass. Every backend accumulates the same integer quantities, so results
// are bit-identical across scalar and SIMD variants.
struct PairSums {
    std::uint64_t sum_a = 0;       // Σ a
    std::uint64_t sum_b = 0;       // Σ b
    std::uint64_t sum_aa = 0;      // Σ a²
    std::uint64_t sum_bb = 0;      // Σ b²
    std::uint64_t sum_ab = 0;      // Σ a·b
    std::uint64_t sum_absdiff = 0; // Σ |a − b|
    std::uint64_t sum_sqdiff = 0;  // Σ (a − b)²
    std::uint64_t diff_count = 0;  // #{ p : a(p) ≠ b(p) }

    bool operator==(const PairSums&) const = default;
};

// One backend's set of inner loops. Buffers may not overlap unless noted.
struct KernelTable {
    const char* name;

    // dst[p] = a[p] ^ b[p]. dst may alias a or b.
    void (*xor_bytes)(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                      std::size_t n);

    // dst[p] = 255 - (a[p] ^ b[p]), i.e. the 8-bit complement of the XOR.
    void (*xor_invert_bytes)(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b,
                             std::size_t n);

    // dst[p] = (src[p] + src[q]) mod 256 where q = p + step[p], reduced by n
    // once when it reaches past the end. Requires step[p] in [0, n) for all p
    // and dst not aliasing src.
    void (*walk_add_bytes)(std::uint8_t* dst, const std::uint8_t* src,
                           const std::uint32_t* step, std::size_t n);

    PairSums (*pair_sums)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
};

// Portable reference implementation; the ground truth the SIMD variants are
// equivalence-tested against.
const KernelTable& scalar();

// Backend used by the library: the fastest variant this host can execute,
// unless the CBRW_KERNELS environment variable names one of available()
// (e.g. CBRW_KERNELS=scalar). Selected once, on first use.
const KernelTable& active();

// All variants runnable on this host, scalar first.
std::vector<const KernelTable*> available();

} // namespace cbrw::kernels

#endif
