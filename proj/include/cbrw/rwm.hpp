/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_RWM_HPP
#define CBRW_RWM_HPP

#include <span>

#include "cbrw/image.hpp"
#include "cbrw/key.hpp"

namespace cbrw {

// Random walk matrix of one plane: for every pixel p (linear, row-major),
// the walk moves offset(p) steps along the flattened image — forward for
// positive offsets, backward for negative, wrapping at either end — and
// R_w(p) = (S(p) + S(target)) mod 256. A zero offset targets the pixel
// itself, giving (2*S(p)) mod 256.
RwmPlane generate_rwm(const ChannelPlane& secret, std::span<const std::int32_t> offsets);

// Channel-wise application of generate_rwm; key channel k drives image
// channel k.
RasterImage generate_rwm_image(const RasterImage& secret, const OffsetGrid& key);

} // namespace cbrw

#endif
