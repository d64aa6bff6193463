/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_IMAGE_HPP
#define CBRW_IMAGE_HPP

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "cbrw/errors.hpp"

namespace cbrw {

// Linear position of (row, col) in a row-major flattening (left-to-right,
// top-to-bottom). All indices are 0-based.
std::size_t flatten_index(int row, int col, int width);

// Target of a signed 1-D walk of `offset` steps from linear position `p` on a
// buffer of `n` pixels. Walking past the last pixel wraps to the first
// (overflow) and walking before the first wraps to the last (underflow), so
// the result is always in [0, n). Mathematical modulo: negative offsets wrap,
// they never error.
std::size_t wrap_target(std::size_t p, std::int64_t offset, std::size_t n);

// One 8-bit intensity grid. Pixels are stored row-major; the value range
// [0,255] is enforced by the element type.
class ChannelPlane {
public:
    ChannelPlane(int width, int height);
    ChannelPlane(int width, int height, std::vector<std::uint8_t> values);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return values_.size(); }

    std::uint8_t at(int row, int col) const;
    void set(int row, int col, std::uint8_t value);

    std::span<const std::uint8_t> pixels() const noexcept { return values_; }
    std::uint8_t* data() noexcept { return values_.data(); }
    const std::uint8_t* data() const noexcept { return values_.data(); }

    bool same_size(const ChannelPlane& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    bool operator==(const ChannelPlane&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> values_;
};

// A random walk matrix is stored as an ordinary plane; the mod-256 step of
// its construction guarantees the value range.
using RwmPlane = ChannelPlane;

// A 1-channel (gray) or 3-channel (color, R-G-B order) stack of equally
// sized planes.
class RasterImage {
public:
    explicit RasterImage(std::vector<ChannelPlane> channels);

    int width() const noexcept { return channels_.front().width(); }
    int height() const noexcept { return channels_.front().height(); }
    int channel_count() const noexcept { return static_cast<int>(channels_.size()); }
    bool is_color() const noexcept { return channels_.size() == 3; }

    const ChannelPlane& channel(int i) const { return channels_.at(static_cast<std::size_t>(i)); }
    ChannelPlane& channel(int i) { return channels_.at(static_cast<std::size_t>(i)); }
    std::span<const ChannelPlane> channels() const noexcept { return channels_; }

    bool same_shape(const RasterImage& other) const noexcept {
        return channel_count() == other.channel_count() &&
               channels_.front().same_size(other.channels_.front());
    }

    bool operator==(const RasterImage&) const = default;

private:
    std::vector<ChannelPlane> channels_;
};

} // namespace cbrw

#endif
