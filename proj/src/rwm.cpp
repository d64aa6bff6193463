/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/rwm.hpp"

#include <string>
#include <vector>

#include "cbrw/kernels.hpp"

namespace cbrw {

RwmPlane generate_rwm(const ChannelPlane& secret, std::span<const std::int32_t> offsets) {
    const std::size_t n = secret.pixel_count();
    if (offsets.size() != n)
        throw ArgumentError("generate_rwm: " + std::to_string(offsets.size()) +
                            " offsets for a plane of " + std::to_string(n) + " pixels");

    // Signed offsets reduced to a single non-negative step in [0, n); the
    // kernel then needs at most one wrap.
    std::vector<std::uint32_t> step(n);
    const auto sn = static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t r = static_cast<std::int64_t>(offsets[i]) % sn;
        if (r < 0)
            r += sn;
        step[i] = static_cast<std::uint32_t>(r);
    }

    std::vector<std::uint8_t> out(n);
    kernels::active().walk_add_bytes(out.data(), secret.data(), step.data(), n);
    return RwmPlane(secret.width(), secret.height(), std::move(out));
}

RasterImage generate_rwm_image(const RasterImage& secret, const OffsetGrid& key) {
    if (key.channel_count() != secret.channel_count() || key.width() != secret.width() ||
        key.height() != secret.height())
        throw ArgumentError("generate_rwm_image: key is " + std::to_string(key.width()) + "x" +
                            std::to_string(key.height()) + "x" +
                            std::to_string(key.channel_count()) + ", image is " +
                            std::to_string(secret.width()) + "x" +
                            std::to_string(secret.height()) + "x" +
                            std::to_string(secret.channel_count()));

    std::vector<ChannelPlane> planes;
    planes.reserve(static_cast<std::size_t>(secret.channel_count()));
    for (int c = 0; c < secret.channel_count(); ++c)
        planes.push_back(generate_rwm(secret.channel(c), key.plane(c)));
    return RasterImage(std::move(planes));
}

} // namespace cbrw
