/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_METRICS_HPP
#define CBRW_METRICS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cbrw/image.hpp"

namespace cbrw {

// The seven dissimilarity measures plus MSE for one (original, template)
// pair. Every metric is computed per channel and arithmetically averaged
// across channels; PSNR uses the channel-averaged MSE.
//
// Internal identities, guaranteed by construction:
//   uaci_percent == 100 * mae / 255
//   rmse == sqrt(mse)
//   mse == 0  <=>  psnr_db infinite  <=>  npcr_percent == 0
struct MetricsReport {
    double cr = 0.0;           // Pearson correlation, in [-1, 1]
    double mae = 0.0;          // mean absolute error, intensity units
    double npcr_percent = 0.0; // share of differing pixel positions, [0, 100]
    double psnr_db = 0.0;      // +infinity when the images are identical
    double rmse = 0.0;
    double ssim = 0.0;         // global-statistics SSIM, in [-1, 1]
    double uaci_percent = 0.0;
    double mse = 0.0;
    bool degenerate_cr = false; // some plane had zero variance; it contributed cr 0

    bool psnr_is_infinite() const noexcept;
};

struct Correlation {
    double value = 0.0;
    bool degenerate = false;
};

// Pearson correlation over all pixels, channel-averaged. A zero-variance
// plane has no defined correlation; it contributes 0 and sets the flag so
// batch runs survive constant fixtures.
Correlation correlation(const RasterImage& a, const RasterImage& b);

double mse(const RasterImage& a, const RasterImage& b);
double rmse(const RasterImage& a, const RasterImage& b);

// 20*log10(255/rmse); +infinity when mse == 0.
double psnr(const RasterImage& a, const RasterImage& b);

// SSIM evaluated from whole-plane means, variances and covariance, with the
// standard stabilizers T1 = (0.01*255)^2 and T2 = (0.03*255)^2.
double ssim(const RasterImage& a, const RasterImage& b);

double mae(const RasterImage& a, const RasterImage& b);
double npcr(const RasterImage& a, const RasterImage& b);
double uaci(const RasterImage& a, const RasterImage& b);

// Exact per-channel counts of each intensity value.
struct HistogramSet {
    std::vector<std::array<std::uint64_t, 256>> channels;
};

HistogramSet histogram(const RasterImage& img);

// All measures for one pair in a single pass over the pixels.
MetricsReport evaluate_pair(const RasterImage& original, const RasterImage& tmpl);

} // namespace cbrw

#endif
