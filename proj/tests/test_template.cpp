/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"

#include "cbrw/keyfile.hpp"
#include "cbrw/metrics.hpp"
#include "cbrw/rwm.hpp"
#include "cbrw/template.hpp"
#include "fixtures.hpp"

using namespace cbrw;
using namespace cbrw::testing;

TEST_CASE("bitxor identities") {
    std::mt19937_64 rng(21);
    const ChannelPlane s = random_plane(5, 3, rng);
    const RwmPlane zeros(5, 3);

    CHECK(cbrw_bitxor(s, zeros) == s);
    const ChannelPlane all_zero = cbrw_bitxor(s, s);
    for (std::uint8_t v : all_zero.pixels())
        CHECK(v == 0);

    const ChannelPlane a(1, 1, {0b10101010});
    const ChannelPlane b(1, 1, {0b01010101});
    CHECK(cbrw_bitxor(a, b).pixels()[0] == 255);
}

TEST_CASE("bitcmp identities") {
    std::mt19937_64 rng(22);
    const ChannelPlane s = random_plane(4, 4, rng);
    const RwmPlane zeros(4, 4);

    const ChannelPlane complemented = cbrw_bitcmp(s, zeros);
    for (std::size_t i = 0; i < s.pixel_count(); ++i)
        CHECK(complemented.pixels()[i] == 255 - s.pixels()[i]);

    const ChannelPlane all_255 = cbrw_bitcmp(s, s);
    for (std::uint8_t v : all_255.pixels())
        CHECK(v == 255);
}

TEST_CASE("bitcmp is the pixel-wise complement of bitxor") {
    std::mt19937_64 rng(23);
    const ChannelPlane s = random_plane(9, 7, rng);
    const RwmPlane rwm = random_plane(9, 7, rng);
    const ChannelPlane x = cbrw_bitxor(s, rwm);
    const ChannelPlane c = cbrw_bitcmp(s, rwm);
    for (std::size_t i = 0; i < s.pixel_count(); ++i)
        CHECK(c.pixels()[i] == 255 - x.pixels()[i]);
}

TEST_CASE("complement twice is identity") {
    std::mt19937_64 rng(24);
    const ChannelPlane s = random_plane(6, 6, rng);
    const RwmPlane zeros(6, 6);
    CHECK(cbrw_bitcmp(cbrw_bitcmp(s, zeros), zeros) == s);
}

TEST_CASE("round trips recover the secret exactly") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        const ChannelPlane s = random_plane(16, 16, rng);
        const RwmPlane rwm = random_plane(16, 16, rng);

        const ChannelPlane c_xor = cbrw_bitxor(s, rwm);
        CHECK(cbrw_bitxor(c_xor, rwm) == s);

        const ChannelPlane c_cmp = cbrw_bitcmp(s, rwm);
        // (255 - C) xor R_w == S
        std::vector<std::uint8_t> inverted(c_cmp.pixels().begin(), c_cmp.pixels().end());
        for (auto& v : inverted)
            v = static_cast<std::uint8_t>(255 - v);
        CHECK(cbrw_bitxor(ChannelPlane(16, 16, inverted), rwm) == s);
    }
}

TEST_CASE("plane transforms reject size mismatches") {
    const ChannelPlane s(4, 4);
    const RwmPlane r(4, 5);
    CHECK_THROWS_AS(cbrw_bitxor(s, r), ArgumentError);
    CHECK_THROWS_AS(cbrw_bitcmp(s, r), ArgumentError);
}

TEST_CASE("enroll composes rwm generation with the chosen transform") {
    const RasterImage image = natural_gray(10, 10);
    const OffsetGrid key = generate_offset_grid(10, 10, 1, 31, 20);

    const CancelableTemplate t = enroll(image, key, Method::BitXor);
    const RwmPlane rwm = generate_rwm(image.channel(0), key.plane(0));
    CHECK(t.image.channel(0) == cbrw_bitxor(image.channel(0), rwm));
    CHECK(t.method == Method::BitXor);
    CHECK(t.key_fingerprint == key_fingerprint(key));

    const CancelableTemplate c = enroll(image, key, Method::BitCmp);
    CHECK(c.image.channel(0) == cbrw_bitcmp(image.channel(0), rwm));
}

TEST_CASE("enroll is deterministic") {
    const RasterImage image = natural_color(8, 8);
    const OffsetGrid key = generate_offset_grid(8, 8, 3, 5, 60);
    const CancelableTemplate a = enroll(image, key, Method::BitXor);
    const CancelableTemplate b = enroll(image, key, Method::BitXor);
    CHECK(a.image == b.image);
    CHECK(a.key_fingerprint == b.key_fingerprint);
}

TEST_CASE("different seeds give templates differing nearly everywhere") {
    const RasterImage image = natural_gray(64, 64);
    const CancelableTemplate a = enroll(image, generate_offset_grid(64, 64, 1, 100, 2048),
                                        Method::BitXor);
    const CancelableTemplate b = enroll(image, generate_offset_grid(64, 64, 1, 200, 2048),
                                        Method::BitXor);
    CHECK(npcr(a.image, b.image) >= 99.0);
    CHECK(a.key_fingerprint != b.key_fingerprint);
}

TEST_CASE("enroll rejects mismatched keys and preserves shape") {
    const RasterImage image = natural_gray(8, 6);
    CHECK_THROWS_AS(enroll(image, generate_offset_grid(8, 8, 1, 1, 9), Method::BitXor),
                    ArgumentError);
    CHECK_THROWS_AS(enroll(image, generate_offset_grid(8, 6, 3, 1, 9), Method::BitXor),
                    ArgumentError);

    const CancelableTemplate t = enroll(image, generate_offset_grid(8, 6, 1, 1, 9),
                                        Method::BitCmp);
    CHECK(t.image.width() == 8);
    CHECK(t.image.height() == 6);
    CHECK(t.image.channel_count() == 1);
}

TEST_CASE("method names round-trip") {
    CHECK(to_string(Method::BitXor) == "xor");
    CHECK(to_string(Method::BitCmp) == "cmp");
    CHECK(method_from_string("xor") == Method::BitXor);
    CHECK(method_from_string("cmp") == Method::BitCmp);
    CHECK_THROWS_AS(method_from_string("rot13"), ArgumentError);
}
