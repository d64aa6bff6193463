/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_KEYFILE_HPP
#define CBRW_KEYFILE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cbrw/key.hpp"

namespace cbrw {

// Binary key file layout, all multi-byte fields little-endian:
//
//   offset  size  field
//        0     4  magic "CBRW"
//        4     1  version (1)
//        5     1  generator_id
//        6     1  channels (1 or 3)
//        7     4  width
//       11     4  height
//       15     8  seed
//       23     4  offset_bound
//       27     -  offsets: channels * width * height int32, row-major,
//                 channel-major
//
// Decoding validates every field and every offset; round trips are
// byte-exact.
std::vector<std::uint8_t> encode_key(const OffsetGrid& key);
OffsetGrid decode_key(std::span<const std::uint8_t> bytes);

void write_key(const OffsetGrid& key, const std::string& path);
OffsetGrid read_key(const std::string& path);

// Stable 64-bit fingerprint of a key: FNV-1a over its encoded bytes. Used to
// record which key produced a template.
std::uint64_t key_fingerprint(const OffsetGrid& key);

} // namespace cbrw

#endif
