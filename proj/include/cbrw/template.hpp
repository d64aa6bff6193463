/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_TEMPLATE_HPP
#define CBRW_TEMPLATE_HPP

#include <cstdint>
#include <string>

#include "cbrw/image.hpp"
#include "cbrw/key.hpp"

namespace cbrw {

enum class Method : std::uint8_t {
    BitXor, // C = S xor R_w
    BitCmp, // C = 255 - (S xor R_w)
};

std::string to_string(Method m);
Method method_from_string(const std::string& name);

// A generated template plus the provenance needed to revoke it: the method
// and a stable fingerprint of the key that produced it.
struct CancelableTemplate {
    RasterImage image;
    Method method;
    std::uint64_t key_fingerprint;
};

// C(p) = S(p) xor R_w(p).
ChannelPlane cbrw_bitxor(const ChannelPlane& secret, const RwmPlane& rwm);

// C(p) = 255 - (S(p) xor R_w(p)): the 8-bit complement of the BitXor plane.
ChannelPlane cbrw_bitcmp(const ChannelPlane& secret, const RwmPlane& rwm);

// Full enrollment: per channel, derive the random walk matrix from the key
// and apply the chosen bit transform. Key and image must agree exactly in
// dimensions and channel count; nothing is resized.
CancelableTemplate enroll(const RasterImage& image, const OffsetGrid& key, Method method);

} // namespace cbrw

#endif
