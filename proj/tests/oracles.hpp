/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations the library is checked against.
// Everything here is written the slow, literal way on purpose: the walk is
// simulated one hop at a time and the metrics re-derive every statistic
// with mean-centered double loops, sharing no code path with the library.

#ifndef CBRW_TESTS_ORACLES_HPP
#define CBRW_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "cbrw/image.hpp"

namespace cbrw::testing {

// Hops |offset| single steps from p, wrapping past either end.
inline std::size_t walk_simulate(std::size_t p, std::int64_t offset, std::size_t n) {
    std::size_t pos = p;
    if (offset >= 0) {
        for (std::int64_t k = 0; k < offset; ++k)
            pos = (pos + 1 == n) ? 0 : pos + 1;
    } else {
        for (std::int64_t k = 0; k > offset; --k)
            pos = (pos == 0) ? n - 1 : pos - 1;
    }
    return pos;
}

inline std::vector<std::uint8_t> rwm_oracle(const std::vector<std::uint8_t>& secret,
                                            const std::vector<std::int32_t>& offsets) {
    const std::size_t n = secret.size();
    std::vector<std::uint8_t> out(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t q = walk_simulate(p, offsets[p], n);
        out[p] = static_cast<std::uint8_t>((static_cast<unsigned>(secret[p]) + secret[q]) % 256);
    }
    return out;
}

struct OracleMetrics {
    double cr = 0.0;
    double mse = 0.0;
    double rmse = 0.0;
    double psnr = 0.0;
    double ssim = 0.0;
    double mae = 0.0;
    double npcr = 0.0;
    double uaci = 0.0;
};

inline OracleMetrics oracle_evaluate(const RasterImage& a, const RasterImage& b) {
    const double t1 = (0.01 * 255.0) * (0.01 * 255.0);
    const double t2 = (0.03 * 255.0) * (0.03 * 255.0);
    const int channels = a.channel_count();
    const int w = a.width(), h = a.height();
    const double n = static_cast<double>(w) * h;

    OracleMetrics m;
    for (int c = 0; c < channels; ++c) {
        const auto& pa = a.channel(c);
        const auto& pb = b.channel(c);

        double mean_a = 0.0, mean_b = 0.0;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                mean_a += pa.at(y, x);
                mean_b += pb.at(y, x);
            }
        }
        mean_a /= n;
        mean_b /= n;

        double ssd_a = 0.0, ssd_b = 0.0, scross = 0.0;
        double sqerr = 0.0, abserr = 0.0, ndiff = 0.0;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const double va = pa.at(y, x), vb = pb.at(y, x);
                ssd_a += (va - mean_a) * (va - mean_a);
                ssd_b += (vb - mean_b) * (vb - mean_b);
                scross += (va - mean_a) * (vb - mean_b);
                sqerr += (va - vb) * (va - vb);
                abserr += std::abs(va - vb);
                if (va != vb)
                    ndiff += 1.0;
            }
        }

        m.cr += (ssd_a == 0.0 || ssd_b == 0.0) ? 0.0 : scross / std::sqrt(ssd_a * ssd_b);
        const double var_a = ssd_a / n, var_b = ssd_b / n, cov = scross / n;
        m.ssim += ((2.0 * mean_a * mean_b + t1) * (2.0 * cov + t2)) /
                  ((mean_a * mean_a + mean_b * mean_b + t1) * (var_a + var_b + t2));
        m.mse += sqerr / n;
        m.mae += abserr / n;
        m.npcr += 100.0 * ndiff / n;
    }
    m.cr /= channels;
    m.ssim /= channels;
    m.mse /= channels;
    m.mae /= channels;
    m.npcr /= channels;
    m.rmse = std::sqrt(m.mse);
    m.psnr = m.mse == 0.0 ? std::numeric_limits<double>::infinity()
                          : 20.0 * std::log10(255.0 / m.rmse);
    m.uaci = 100.0 * m.mae / 255.0;
    return m;
}

// |x - y| <= tol * max(1, |x|, |y|); infinities must match exactly.
inline bool close_rel(double x, double y, double tol) {
    if (std::isinf(x) || std::isinf(y))
        return x == y;
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= tol * scale;
}

} // namespace cbrw::testing

#endif
