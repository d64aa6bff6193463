/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_PNM_HPP
#define CBRW_PNM_HPP

#include <string>

#include "cbrw/image.hpp"

namespace cbrw {

// Binary PGM (P5, gray) and PPM (P6, color) with maxval 255, the only raster
// formats this library persists. Decoding is strict: anything malformed is a
// FormatError carrying the byte offset, never a guess.
RasterImage read_image(const std::string& path);

// Gray images are written as P5, 3-channel images as P6. Round trips are
// byte-lossless.
void write_image(const RasterImage& img, const std::string& path);

} // namespace cbrw

#endif
