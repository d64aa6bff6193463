/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/template.hpp"

#include <vector>

#include "cbrw/kernels.hpp"
#include "cbrw/keyfile.hpp"
#include "cbrw/rwm.hpp"

namespace cbrw {

std::string to_string(Method m) {
    return m == Method::BitXor ? "xor" : "cmp";
}

Method method_from_string(const std::string& name) {
    if (name == "xor")
        return Method::BitXor;
    if (name == "cmp")
        return Method::BitCmp;
    throw ArgumentError("unknown method \"" + name + "\" (expected xor or cmp)");
}

namespace {

void check_same_size(const ChannelPlane& a, const ChannelPlane& b, const char* op) {
    if (!a.same_size(b))
        throw ArgumentError(std::string(op) + ": plane sizes differ, " +
                            std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                            " vs " + std::to_string(b.width()) + "x" +
                            std::to_string(b.height()));
}

} // namespace

ChannelPlane cbrw_bitxor(const ChannelPlane& secret, const RwmPlane& rwm) {
    check_same_size(secret, rwm, "cbrw_bitxor");
    std::vector<std::uint8_t> out(secret.pixel_count());
    kernels::active().xor_bytes(out.data(), secret.data(), rwm.data(), out.size());
    return ChannelPlane(secret.width(), secret.height(), std::move(out));
}

ChannelPlane cbrw_bitcmp(const ChannelPlane& secret, const RwmPlane& rwm) {
    check_same_size(secret, rwm, "cbrw_bitcmp");
    std::vector<std::uint8_t> out(secret.pixel_count());
    kernels::active().xor_invert_bytes(out.data(), secret.data(), rwm.data(), out.size());
    return ChannelPlane(secret.width(), secret.height(), std::move(out));
}

CancelableTemplate enroll(const RasterImage& image, const OffsetGrid& key, Method method) {
    if (key.channel_count() != image.channel_count() || key.width() != image.width() ||
        key.height() != image.height())
        throw ArgumentError("enroll: key is " + std::to_string(key.width()) + "x" +
                            std::to_string(key.height()) + "x" +
                            std::to_string(key.channel_count()) + ", image is " +
                            std::to_string(image.width()) + "x" + std::to_string(image.height()) +
                            "x" + std::to_string(image.channel_count()) +
                            "; dimensions must match exactly");

    std::vector<ChannelPlane> planes;
    planes.reserve(static_cast<std::size_t>(image.channel_count()));
    for (int c = 0; c < image.channel_count(); ++c) {
        const RwmPlane rwm = generate_rwm(image.channel(c), key.plane(c));
        planes.push_back(method == Method::BitXor ? cbrw_bitxor(image.channel(c), rwm)
                                                  : cbrw_bitcmp(image.channel(c), rwm));
    }
    return CancelableTemplate{RasterImage(std::move(planes)), method, key_fingerprint(key)};
}

} // namespace cbrw
