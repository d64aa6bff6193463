/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cbrw/kernels.hpp"

namespace cbrw {

bool MetricsReport::psnr_is_infinite() const noexcept {
    return std::isinf(psnr_db);
}

namespace {

constexpr double kSsimT1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kSsimT2 = (0.03 * 255.0) * (0.03 * 255.0);

using kernels::PairSums;

std::vector<PairSums> channel_sums(const RasterImage& a, const RasterImage& b, const char* op) {
    if (!a.same_shape(b))
        throw ArgumentError(std::string(op) + ": image shapes differ, " +
                            std::to_string(a.width()) + "x" + std::to_string(a.height()) + "x" +
                            std::to_string(a.channel_count()) + " vs " +
                            std::to_string(b.width()) + "x" + std::to_string(b.height()) + "x" +
                            std::to_string(b.channel_count()));
    std::vector<PairSums> sums;
    sums.reserve(static_cast<std::size_t>(a.channel_count()));
    for (int c = 0; c < a.channel_count(); ++c)
        sums.push_back(kernels::active().pair_sums(a.channel(c).data(), b.channel(c).data(),
                                                   a.channel(c).pixel_count()));
    return sums;
}

// Exact integer numerators of n²·variance and n²·covariance; converting to
// double only at the end avoids the cancellation in E[xy] - E[x]E[y].
__int128 variance_num(std::uint64_t n, std::uint64_t sum_sq, std::uint64_t sum) {
    return static_cast<__int128>(n) * static_cast<__int128>(sum_sq) -
           static_cast<__int128>(sum) * static_cast<__int128>(sum);
}

__int128 covariance_num(std::uint64_t n, const PairSums& s) {
    return static_cast<__int128>(n) * static_cast<__int128>(s.sum_ab) -
           static_cast<__int128>(s.sum_a) * static_cast<__int128>(s.sum_b);
}

double channel_cr(std::uint64_t n, const PairSums& s, bool& degenerate) {
    const __int128 var_a = variance_num(n, s.sum_aa, s.sum_a);
    const __int128 var_b = variance_num(n, s.sum_bb, s.sum_b);
    if (var_a == 0 || var_b == 0) {
        degenerate = true;
        return 0.0;
    }
    return static_cast<double>(covariance_num(n, s)) /
           std::sqrt(static_cast<double>(var_a) * static_cast<double>(var_b));
}

double channel_ssim(std::uint64_t n, const PairSums& s) {
    const double dn = static_cast<double>(n);
    const double mu_a = static_cast<double>(s.sum_a) / dn;
    const double mu_b = static_cast<double>(s.sum_b) / dn;
    const double var_a = static_cast<double>(variance_num(n, s.sum_aa, s.sum_a)) / (dn * dn);
    const double var_b = static_cast<double>(variance_num(n, s.sum_bb, s.sum_b)) / (dn * dn);
    const double cov = static_cast<double>(covariance_num(n, s)) / (dn * dn);
    const double num = (2.0 * mu_a * mu_b + kSsimT1) * (2.0 * cov + kSsimT2);
    const double den = (mu_a * mu_a + mu_b * mu_b + kSsimT1) * (var_a + var_b + kSsimT2);
    return num / den;
}

double average_mse(const std::vector<PairSums>& sums, std::uint64_t n) {
    double total = 0.0;
    for (const PairSums& s : sums)
        total += static_cast<double>(s.sum_sqdiff) / static_cast<double>(n);
    return total / static_cast<double>(sums.size());
}

bool all_identical(const std::vector<PairSums>& sums) {
    for (const PairSums& s : sums)
        if (s.sum_sqdiff != 0)
            return false;
    return true;
}

double psnr_from(const std::vector<PairSums>& sums, std::uint64_t n) {
    if (all_identical(sums))
        return std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(255.0 / std::sqrt(average_mse(sums, n)));
}

} // namespace

Correlation correlation(const RasterImage& a, const RasterImage& b) {
    const auto sums = channel_sums(a, b, "correlation");
    const auto n = static_cast<std::uint64_t>(a.channel(0).pixel_count());
    Correlation result;
    double total = 0.0;
    for (const PairSums& s : sums)
        total += channel_cr(n, s, result.degenerate);
    result.value = total / static_cast<double>(sums.size());
    return result;
}

double mse(const RasterImage& a, const RasterImage& b) {
    const auto sums = channel_sums(a, b, "mse");
    return average_mse(sums, a.channel(0).pixel_count());
}

double rmse(const RasterImage& a, const RasterImage& b) {
    return std::sqrt(mse(a, b));
}

double psnr(const RasterImage& a, const RasterImage& b) {
    const auto sums = channel_sums(a, b, "psnr");
    return psnr_from(sums, a.channel(0).pixel_count());
}

double ssim(const RasterImage& a, const RasterImage& b) {
    const auto sums = channel_sums(a, b, "ssim");
    const auto n = static_cast<std::uint64_t>(a.channel(0).pixel_count());
    double total = 0.0;
    for (const PairSums& s : sums)
        total += channel_ssim(n, s);
    return total / static_cast<double>(sums.size());
}

double mae(const RasterImage& a, const RasterImage& b) {
    const auto sums = channel_sums(a, b, "mae");
    const auto n = static_cast<double>(a.channel(0).pixel_count());
    double total = 0.0;
    for (const PairSums& s : sums)
        total += static_cast<double>(s.sum_absdiff) / n;
    return total / static_cast<double>(sums.size());
}

double npcr(const RasterImage& a, const RasterImage& b) {
    const auto sums = channel_sums(a, b, "npcr");
    const auto n = static_cast<double>(a.channel(0).pixel_count());
    double total = 0.0;
    for (const PairSums& s : sums)
        total += 100.0 * static_cast<double>(s.diff_count) / n;
    return total / static_cast<double>(sums.size());
}

double uaci(const RasterImage& a, const RasterImage& b) {
    return 100.0 * mae(a, b) / 255.0;
}

HistogramSet histogram(const RasterImage& img) {
    HistogramSet set;
    set.channels.resize(static_cast<std::size_t>(img.channel_count()));
    for (int c = 0; c < img.channel_count(); ++c) {
        auto& bins = set.channels[static_cast<std::size_t>(c)];
        bins.fill(0);
        for (std::uint8_t v : img.channel(c).pixels())
            ++bins[v];
    }
    return set;
}

MetricsReport evaluate_pair(const RasterImage& original, const RasterImage& tmpl) {
    const auto sums = channel_sums(original, tmpl, "evaluate_pair");
    const auto n = static_cast<std::uint64_t>(original.channel(0).pixel_count());
    const auto dn = static_cast<double>(n);
    const auto nch = static_cast<double>(sums.size());

    MetricsReport r;
    double cr_total = 0.0, ssim_total = 0.0, mae_total = 0.0, npcr_total = 0.0;
    for (const PairSums& s : sums) {
        cr_total += channel_cr(n, s, r.degenerate_cr);
        ssim_total += channel_ssim(n, s);
        mae_total += static_cast<double>(s.sum_absdiff) / dn;
        npcr_total += 100.0 * static_cast<double>(s.diff_count) / dn;
    }
    r.cr = cr_total / nch;
    r.ssim = ssim_total / nch;
    r.mae = mae_total / nch;
    r.npcr_percent = npcr_total / nch;
    r.uaci_percent = 100.0 * r.mae / 255.0;
    r.mse = average_mse(sums, n);
    r.rmse = std::sqrt(r.mse);
    r.psnr_db = psnr_from(sums, n);
    return r;
}

} // namespace cbrw
