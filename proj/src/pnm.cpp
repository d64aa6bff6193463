/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/pnm.hpp"

#include <fstream>
#include <vector>

namespace cbrw {

namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::vector<std::uint8_t> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failure on " + path);
    return bytes;
}

// Header tokens may be separated by whitespace and '#' comments that run to
// end of line.
void skip_separators(const std::vector<std::uint8_t>& buf, std::size_t& pos) {
    while (pos < buf.size()) {
        if (is_pnm_space(buf[pos])) {
            ++pos;
        } else if (buf[pos] == '#') {
            while (pos < buf.size() && buf[pos] != '\n')
                ++pos;
        } else {
            break;
        }
    }
}

std::uint32_t read_header_number(const std::vector<std::uint8_t>& buf, std::size_t& pos,
                                 const char* what) {
    skip_separators(buf, pos);
    if (pos >= buf.size())
        throw FormatError(std::string("unexpected end of header while reading ") + what, pos);
    if (buf[pos] < '0' || buf[pos] > '9')
        throw FormatError(std::string("expected digit for ") + what, pos);
    std::uint64_t value = 0;
    while (pos < buf.size() && buf[pos] >= '0' && buf[pos] <= '9') {
        value = value * 10 + (buf[pos] - '0');
        if (value > 1000000000ULL)
            throw FormatError(std::string(what) + " too large", pos);
        ++pos;
    }
    return static_cast<std::uint32_t>(value);
}

} // namespace

RasterImage read_image(const std::string& path) {
    const std::vector<std::uint8_t> buf = slurp(path);

    if (buf.size() < 2 || buf[0] != 'P' || (buf[1] != '5' && buf[1] != '6'))
        throw FormatError("not a binary PGM/PPM (magic must be P5 or P6)", 0);
    const int channels = buf[1] == '5' ? 1 : 3;

    std::size_t pos = 2;
    const std::uint32_t width = read_header_number(buf, pos, "width");
    const std::uint32_t height = read_header_number(buf, pos, "height");
    if (width < 1 || height < 1)
        throw FormatError("image dimensions must be >= 1", pos);

    const std::size_t maxval_pos = [&] {
        std::size_t probe = pos;
        skip_separators(buf, probe);
        return probe;
    }();
    const std::uint32_t maxval = read_header_number(buf, pos, "maxval");
    if (maxval != 255)
        throw FormatError("unsupported maxval " + std::to_string(maxval) + " (must be 255)",
                          maxval_pos);

    // Exactly one whitespace byte between the header and the payload.
    if (pos >= buf.size() || !is_pnm_space(buf[pos]))
        throw FormatError("expected single whitespace before pixel data", pos);
    ++pos;

    const std::size_t pixel_count = static_cast<std::size_t>(width) * height;
    const std::size_t need = pixel_count * static_cast<std::size_t>(channels);
    if (buf.size() - pos < need)
        throw FormatError("truncated payload: have " + std::to_string(buf.size() - pos) +
                              " bytes, need " + std::to_string(need),
                          buf.size());
    if (buf.size() - pos > need)
        throw FormatError("trailing data after payload", pos + need);

    const int w = static_cast<int>(width);
    const int h = static_cast<int>(height);
    if (channels == 1) {
        std::vector<std::uint8_t> values(buf.begin() + static_cast<std::ptrdiff_t>(pos),
                                         buf.end());
        return RasterImage({ChannelPlane(w, h, std::move(values))});
    }

    // P6 interleaves RGB per pixel; split into planes.
    std::vector<std::uint8_t> r(pixel_count), g(pixel_count), b(pixel_count);
    for (std::size_t i = 0; i < pixel_count; ++i) {
        r[i] = buf[pos + 3 * i];
        g[i] = buf[pos + 3 * i + 1];
        b[i] = buf[pos + 3 * i + 2];
    }
    return RasterImage({ChannelPlane(w, h, std::move(r)), ChannelPlane(w, h, std::move(g)),
                        ChannelPlane(w, h, std::move(b))});
}

void write_image(const RasterImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");

    out << (img.is_color() ? "P6" : "P5") << '\n'
        << img.width() << ' ' << img.height() << '\n'
        << "255" << '\n';

    if (!img.is_color()) {
        const auto pixels = img.channel(0).pixels();
        out.write(reinterpret_cast<const char*>(pixels.data()),
                  static_cast<std::streamsize>(pixels.size()));
    } else {
        const auto r = img.channel(0).pixels();
        const auto g = img.channel(1).pixels();
        const auto b = img.channel(2).pixels();
        std::vector<std::uint8_t> row(r.size() * 3);
        for (std::size_t i = 0; i < r.size(); ++i) {
            row[3 * i] = r[i];
            row[3 * i + 1] = g[i];
            row[3 * i + 2] = b[i];
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    out.flush();
    if (!out)
        throw IoError("write failure on " + path);
}

} // namespace cbrw
