/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/key.hpp"

#include <bit>
#include <string>

namespace cbrw {

OffsetGrid::OffsetGrid(int width, int height, std::uint64_t seed, std::int32_t offset_bound,
                       GeneratorId generator, std::vector<std::vector<std::int32_t>> planes)
    : width_(width),
      height_(height),
      seed_(seed),
      offset_bound_(offset_bound),
      generator_(generator),
      planes_(std::move(planes)) {
    if (width < 1 || height < 1)
        throw ArgumentError("OffsetGrid: dimensions must be >= 1, got " + std::to_string(width) +
                            "x" + std::to_string(height));
    if (offset_bound < 1)
        throw ArgumentError("OffsetGrid: offset_bound must be >= 1, got " +
                            std::to_string(offset_bound));
    if (planes_.size() != 1 && planes_.size() != 3)
        throw ArgumentError("OffsetGrid: channel count must be 1 or 3, got " +
                            std::to_string(planes_.size()));
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    for (const auto& plane : planes_) {
        if (plane.size() != expected)
            throw ArgumentError("OffsetGrid: plane has " + std::to_string(plane.size()) +
                                " offsets, expected " + std::to_string(expected));
        for (std::int32_t v : plane) {
            if (v < -offset_bound || v > offset_bound)
                throw ArgumentError("OffsetGrid: offset " + std::to_string(v) +
                                    " outside [-" + std::to_string(offset_bound) + ", " +
                                    std::to_string(offset_bound) + "]");
        }
    }
}

std::uint64_t SplitMix64::next_below(std::uint64_t range) {
    if (range == 0)
        throw ArgumentError("SplitMix64::next_below: range must be >= 1");
    const std::uint64_t mask =
        range == 1 ? 0 : (~std::uint64_t{0} >> std::countl_zero(range - 1));
    std::uint64_t v;
    do {
        v = next() & mask;
    } while (v >= range);
    return v;
}

OffsetGrid generate_offset_grid(int width, int height, int channels, std::uint64_t seed,
                                std::int32_t offset_bound) {
    if (width < 1 || height < 1)
        throw ArgumentError("generate_offset_grid: dimensions must be >= 1, got " +
                            std::to_string(width) + "x" + std::to_string(height));
    if (channels != 1 && channels != 3)
        throw ArgumentError("generate_offset_grid: channel count must be 1 or 3, got " +
                            std::to_string(channels));
    if (offset_bound < 1)
        throw ArgumentError("generate_offset_grid: offset_bound must be >= 1, got " +
                            std::to_string(offset_bound));

    SplitMix64 rng(seed);
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(offset_bound) + 1;
    const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);

    std::vector<std::vector<std::int32_t>> planes;
    planes.reserve(static_cast<std::size_t>(channels));
    for (int c = 0; c < channels; ++c) {
        std::vector<std::int32_t> plane(n);
        for (std::size_t i = 0; i < n; ++i)
            plane[i] = static_cast<std::int32_t>(static_cast<std::int64_t>(rng.next_below(range)) -
                                                 offset_bound);
        planes.push_back(std::move(plane));
    }
    return OffsetGrid(width, height, seed, offset_bound, GeneratorId::SplitMix64Rejection,
                      std::move(planes));
}

namespace {

constexpr std::uint64_t kFnvOffsetBasis = 0xCBF29CE484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;

} // namespace

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = kFnvOffsetBasis;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = kFnvOffsetBasis;
    for (char c : text) {
        h ^= static_cast<std::uint8_t>(c);
        h *= kFnvPrime;
    }
    return h;
}

} // namespace cbrw
