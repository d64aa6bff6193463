/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_TESTS_FIXTURES_HPP
#define CBRW_TESTS_FIXTURES_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "cbrw/image.hpp"

namespace cbrw::testing {

// Smooth multi-scale terrain: a gradient, three sinusoids, a bright blob
// and fine deterministic grain. The raw field is the basis for both test
// fixtures below.
inline std::vector<double> terrain_field(int width, int height, std::uint64_t variant) {
    std::vector<double> field(static_cast<std::size_t>(width) *
                              static_cast<std::size_t>(height));
    const double cx = width * 0.42, cy = height * 0.57;
    const double phase = static_cast<double>(variant % 97);
    std::size_t i = 0;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x, ++i) {
            double v = 200.0 * static_cast<double>(x + y) / static_cast<double>(width + height - 2);
            v += 24.0 * std::sin(x * 0.071 + phase * 0.13);
            v += 21.0 * std::cos(y * 0.053 + phase * 0.07);
            v += 14.0 * std::sin((x + 2 * y) * 0.0137 + phase * 0.05);
            const double dx = x - cx, dy = y - cy;
            v += 46.0 * std::exp(-(dx * dx + dy * dy) / (2.0 * 45.0 * 45.0));
            v += static_cast<double>(((x * 73856093u) ^ (y * 19349663u) ^
                                      static_cast<unsigned>(variant * 2654435761u)) %
                                     97u) /
                 24.0;
            field[i] = v;
        }
    }
    return field;
}

// Synthetic stand-in for a well-exposed natural photograph: the smooth
// terrain, contrast-stretched by exact histogram equalization. Spatially
// correlated like a photo, with the broad tonal spread the paper's datasets
// show.
inline ChannelPlane natural_plane(int width, int height, std::uint64_t variant = 0) {
    const std::vector<double> field = terrain_field(width, height, variant);
    const std::size_t n = field.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return field[a] < field[b]; });
    std::vector<std::uint8_t> values(n);
    for (std::size_t k = 0; k < n; ++k)
        values[order[k]] = static_cast<std::uint8_t>((k * 256) / n);
    return ChannelPlane(width, height, std::move(values));
}

// The same terrain without equalization: low contrast, strongly peaked
// histogram. Used where a test wants a histogram with dominant bins.
inline ChannelPlane smooth_plane(int width, int height, std::uint64_t variant = 0) {
    const std::vector<double> field = terrain_field(width, height, variant);
    std::vector<std::uint8_t> values(field.size());
    for (std::size_t i = 0; i < field.size(); ++i) {
        double v = field[i];
        if (v < 0.0)
            v = 0.0;
        if (v > 255.0)
            v = 255.0;
        values[i] = static_cast<std::uint8_t>(v + 0.5);
    }
    return ChannelPlane(width, height, std::move(values));
}

inline RasterImage natural_gray(int width = 320, int height = 240, std::uint64_t variant = 0) {
    return RasterImage({natural_plane(width, height, variant)});
}

inline RasterImage natural_color(int width, int height, std::uint64_t variant = 0) {
    return RasterImage({natural_plane(width, height, variant),
                        natural_plane(width, height, variant + 1),
                        natural_plane(width, height, variant + 2)});
}

inline ChannelPlane random_plane(int width, int height, std::mt19937_64& rng) {
    std::vector<std::uint8_t> values(static_cast<std::size_t>(width) *
                                     static_cast<std::size_t>(height));
    for (auto& v : values)
        v = static_cast<std::uint8_t>(rng() & 0xFF);
    return ChannelPlane(width, height, std::move(values));
}

inline RasterImage random_gray(int width, int height, std::mt19937_64& rng) {
    return RasterImage({random_plane(width, height, rng)});
}

inline std::vector<std::int32_t> random_offsets(std::size_t n, std::int32_t lo, std::int32_t hi,
                                                std::mt19937_64& rng) {
    std::vector<std::int32_t> offsets(n);
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    for (auto& v : offsets)
        v = static_cast<std::int32_t>(static_cast<std::int64_t>(rng() % span) + lo);
    return offsets;
}

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("cbrw_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

inline void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

} // namespace cbrw::testing

#endif
