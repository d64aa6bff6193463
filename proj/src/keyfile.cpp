/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/keyfile.hpp"

#include <algorithm>
#include <fstream>

namespace cbrw {

namespace {

constexpr std::size_t kHeaderSize = 27;
constexpr char kMagic[4] = {'C', 'B', 'R', 'W'};
constexpr std::uint8_t kVersion = 1;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v));
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t pos) {
    return static_cast<std::uint32_t>(b[pos]) | (static_cast<std::uint32_t>(b[pos + 1]) << 8) |
           (static_cast<std::uint32_t>(b[pos + 2]) << 16) |
           (static_cast<std::uint32_t>(b[pos + 3]) << 24);
}

std::uint64_t get_u64(std::span<const std::uint8_t> b, std::size_t pos) {
    return static_cast<std::uint64_t>(get_u32(b, pos)) |
           (static_cast<std::uint64_t>(get_u32(b, pos + 4)) << 32);
}

} // namespace

std::vector<std::uint8_t> encode_key(const OffsetGrid& key) {
    const auto plane_size =
        static_cast<std::size_t>(key.width()) * static_cast<std::size_t>(key.height());
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + 4 * plane_size * static_cast<std::size_t>(key.channel_count()));

    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(key.generator()));
    out.push_back(static_cast<std::uint8_t>(key.channel_count()));
    put_u32(out, static_cast<std::uint32_t>(key.width()));
    put_u32(out, static_cast<std::uint32_t>(key.height()));
    put_u64(out, key.seed());
    put_u32(out, static_cast<std::uint32_t>(key.offset_bound()));

    for (int c = 0; c < key.channel_count(); ++c)
        for (std::int32_t v : key.plane(c))
            put_u32(out, static_cast<std::uint32_t>(v));
    return out;
}

OffsetGrid decode_key(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4 || !std::equal(kMagic, kMagic + 4, bytes.begin()))
        throw FormatError("bad magic (expected \"CBRW\")", 0);
    if (bytes.size() < kHeaderSize)
        throw FormatError("truncated key header", bytes.size());
    if (bytes[4] != kVersion)
        throw FormatError("unsupported key file version " + std::to_string(bytes[4]), 4);
    const std::uint8_t generator = bytes[5];
    if (generator != static_cast<std::uint8_t>(GeneratorId::SplitMix64Rejection))
        throw FormatError("unknown generator_id " + std::to_string(generator), 5);
    const std::uint8_t channels = bytes[6];
    if (channels != 1 && channels != 3)
        throw FormatError("channel count must be 1 or 3, got " + std::to_string(channels), 6);
    const std::uint32_t width = get_u32(bytes, 7);
    if (width < 1 || width > 1000000000U)
        throw FormatError("invalid width " + std::to_string(width), 7);
    const std::uint32_t height = get_u32(bytes, 11);
    if (height < 1 || height > 1000000000U)
        throw FormatError("invalid height " + std::to_string(height), 11);
    const std::uint64_t seed = get_u64(bytes, 15);
    const auto bound = static_cast<std::int32_t>(get_u32(bytes, 23));
    if (bound < 1)
        throw FormatError("invalid offset_bound " + std::to_string(bound), 23);

    const std::size_t plane_size = static_cast<std::size_t>(width) * height;
    const std::size_t need = kHeaderSize + 4 * plane_size * channels;
    if (bytes.size() < need)
        throw FormatError("truncated offsets: have " + std::to_string(bytes.size()) +
                              " bytes, need " + std::to_string(need),
                          bytes.size());
    if (bytes.size() > need)
        throw FormatError("trailing data after offsets", need);

    std::vector<std::vector<std::int32_t>> planes;
    planes.reserve(channels);
    std::size_t pos = kHeaderSize;
    for (int c = 0; c < channels; ++c) {
        std::vector<std::int32_t> plane(plane_size);
        for (std::size_t i = 0; i < plane_size; ++i, pos += 4) {
            const auto v = static_cast<std::int32_t>(get_u32(bytes, pos));
            if (v < -bound || v > bound)
                throw FormatError("offset " + std::to_string(v) + " outside [-" +
                                      std::to_string(bound) + ", " + std::to_string(bound) + "]",
                                  pos);
            plane[i] = v;
        }
        planes.push_back(std::move(plane));
    }
    return OffsetGrid(static_cast<int>(width), static_cast<int>(height), seed, bound,
                      static_cast<GeneratorId>(generator), std::move(planes));
}

void write_key(const OffsetGrid& key, const std::string& path) {
    const std::vector<std::uint8_t> bytes = encode_key(key);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out)
        throw IoError("write failure on " + path);
}

OffsetGrid read_key(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failure on " + path);
    return decode_key(bytes);
}

std::uint64_t key_fingerprint(const OffsetGrid& key) {
    return fnv1a64(std::span<const std::uint8_t>(encode_key(key)));
}

} // namespace cbrw
