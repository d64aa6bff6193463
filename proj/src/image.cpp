/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/image.hpp"

#include <string>

namespace cbrw {

std::size_t flatten_index(int row, int col, int width) {
    if (width < 1)
        throw ArgumentError("flatten_index: width must be >= 1, got " + std::to_string(width));
    if (row < 0 || col < 0 || col >= width)
        throw ArgumentError("flatten_index: position (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range for width " +
                            std::to_string(width));
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(col);
}

std::size_t wrap_target(std::size_t p, std::int64_t offset, std::size_t n) {
    if (n == 0)
        throw ArgumentError("wrap_target: pixel count must be >= 1");
    if (p >= n)
        throw ArgumentError("wrap_target: position " + std::to_string(p) +
                            " out of range for " + std::to_string(n) + " pixels");
    const auto sn = static_cast<std::int64_t>(n);
    // Reduce the offset first so p + offset cannot overflow.
    std::int64_t m = (static_cast<std::int64_t>(p) + offset % sn) % sn;
    if (m < 0)
        m += sn;
    return static_cast<std::size_t>(m);
}

namespace {

void check_dims(int width, int height) {
    if (width < 1 || height < 1)
        throw ArgumentError("ChannelPlane: dimensions must be >= 1, got " +
                            std::to_string(width) + "x" + std::to_string(height));
}

} // namespace

ChannelPlane::ChannelPlane(int width, int height) : width_(width), height_(height) {
    check_dims(width, height);
    values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

ChannelPlane::ChannelPlane(int width, int height, std::vector<std::uint8_t> values)
    : width_(width), height_(height), values_(std::move(values)) {
    check_dims(width, height);
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (values_.size() != expected)
        throw ArgumentError("ChannelPlane: got " + std::to_string(values_.size()) +
                            " values for a " + std::to_string(width) + "x" +
                            std::to_string(height) + " plane (" + std::to_string(expected) +
                            " expected)");
}

std::uint8_t ChannelPlane::at(int row, int col) const {
    if (row >= height_)
        throw ArgumentError("ChannelPlane: row " + std::to_string(row) +
                            " out of range for height " + std::to_string(height_));
    return values_[flatten_index(row, col, width_)];
}

void ChannelPlane::set(int row, int col, std::uint8_t value) {
    if (row >= height_)
        throw ArgumentError("ChannelPlane: row " + std::to_string(row) +
                            " out of range for height " + std::to_string(height_));
    values_[flatten_index(row, col, width_)] = value;
}

RasterImage::RasterImage(std::vector<ChannelPlane> channels) : channels_(std::move(channels)) {
    if (channels_.size() != 1 && channels_.size() != 3)
        throw ArgumentError("RasterImage: channel count must be 1 or 3, got " +
                            std::to_string(channels_.size()));
    for (const auto& plane : channels_) {
        if (!plane.same_size(channels_.front()))
            throw ArgumentError("RasterImage: all channels must share dimensions");
    }
}

} // namespace cbrw
