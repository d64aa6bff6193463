/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_KEY_HPP
#define CBRW_KEY_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cbrw/errors.hpp"

namespace cbrw {

// Identifiers of the pseudo-random generators a key file may declare. The
// generator behind a key must be reproducible bit-for-bit on any platform,
// so only algorithms fully specified by this library are admitted.
enum class GeneratorId : std::uint8_t {
    SplitMix64Rejection = 1, // splitmix64 stream + bitmask rejection sampling
};

// The revocable key: one signed-offset plane per image channel, all values
// in [-offset_bound, +offset_bound]. Regenerating with the same (seed, dims,
// bound, channels, generator) reproduces the grid exactly; changing the seed
// revokes the old template.
class OffsetGrid {
public:
    OffsetGrid(int width, int height, std::uint64_t seed, std::int32_t offset_bound,
               GeneratorId generator, std::vector<std::vector<std::int32_t>> planes);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int channel_count() const noexcept { return static_cast<int>(planes_.size()); }
    std::uint64_t seed() const noexcept { return seed_; }
    std::int32_t offset_bound() const noexcept { return offset_bound_; }
    GeneratorId generator() const noexcept { return generator_; }

    std::span<const std::int32_t> plane(int channel) const {
        return planes_.at(static_cast<std::size_t>(channel));
    }

    bool operator==(const OffsetGrid&) const = default;

private:
    int width_;
    int height_;
    std::uint64_t seed_;
    std::int32_t offset_bound_;
    GeneratorId generator_;
    std::vector<std::vector<std::int32_t>> planes_;
};

// Draws channels * width * height offsets independently and uniformly from
// the integers [-offset_bound, +offset_bound], channel-major, row-major
// within a channel. Deterministic in all arguments.
OffsetGrid generate_offset_grid(int width, int height, int channels, std::uint64_t seed,
                                std::int32_t offset_bound);

// The raw 64-bit stream behind generator_id 1. Exposed so key files can be
// re-derived and audited; state advances by the published splitmix64 step.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, range) by masking to the next power of two and
    // rejecting overshoot; unbiased and platform-stable.
    std::uint64_t next_below(std::uint64_t range);

private:
    std::uint64_t state_;
};

// FNV-1a over a byte sequence; the stable hash used for key fingerprints and
// per-image seed derivation.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);
std::uint64_t fnv1a64(std::string_view text);

} // namespace cbrw

#endif
