/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"

#include "cbrw/metrics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cbrw;
using namespace cbrw::testing;

namespace {

// The anti-correlated 2x2 pair used across the worked metric examples.
RasterImage anti_a() {
    return RasterImage({ChannelPlane(2, 2, {0, 255, 0, 255})});
}

RasterImage anti_b() {
    return RasterImage({ChannelPlane(2, 2, {255, 0, 255, 0})});
}

} // namespace

TEST_CASE("correlation: self, anti, degenerate") {
    const RasterImage s = natural_gray(16, 16);
    const Correlation self = correlation(s, s);
    CHECK(self.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(!self.degenerate);

    const Correlation anti = correlation(anti_a(), anti_b());
    CHECK(anti.value == doctest::Approx(-1.0).epsilon(1e-12));

    const RasterImage constant({ChannelPlane(4, 4, std::vector<std::uint8_t>(16, 9))});
    const Correlation degenerate = correlation(constant, natural_gray(4, 4));
    CHECK(degenerate.value == 0.0);
    CHECK(degenerate.degenerate);
}

TEST_CASE("mse / rmse / psnr worked values") {
    const RasterImage s = natural_gray(8, 8);
    CHECK(mse(s, s) == 0.0);
    CHECK(rmse(s, s) == 0.0);
    CHECK(std::isinf(psnr(s, s)));

    CHECK(mse(anti_a(), anti_b()) == 65025.0);
    CHECK(rmse(anti_a(), anti_b()) == 255.0);
    CHECK(psnr(anti_a(), anti_b()) == 0.0);
}

TEST_CASE("ssim worked values") {
    const RasterImage s = natural_gray(8, 8);
    CHECK(ssim(s, s) == doctest::Approx(1.0).epsilon(1e-12));

    // Hand evaluation for the anti-correlated pair: mu = 127.5 both sides,
    // population variance 16256.25, covariance -16256.25; the mean factors
    // cancel, leaving (2*cov + T2) / (var_a + var_b + T2).
    const double expected = (-2.0 * 16256.25 + 58.5225) / (2.0 * 16256.25 + 58.5225);
    CHECK(ssim(anti_a(), anti_b()) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(ssim(anti_a(), anti_b()) == doctest::Approx(-0.9964).epsilon(1e-4));

    const RasterImage constant({ChannelPlane(3, 3, std::vector<std::uint8_t>(9, 50))});
    CHECK(ssim(constant, constant) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mae / npcr / uaci worked values") {
    const RasterImage s = natural_gray(8, 8);
    CHECK(mae(s, s) == 0.0);
    CHECK(npcr(s, s) == 0.0);
    CHECK(uaci(s, s) == 0.0);

    CHECK(mae(anti_a(), anti_b()) == 255.0);
    CHECK(npcr(anti_a(), anti_b()) == 100.0);
    CHECK(uaci(anti_a(), anti_b()) == 100.0);

    const RasterImage one_diff({ChannelPlane(2, 2, {0, 255, 0, 255})});
    const RasterImage one_diff_b({ChannelPlane(2, 2, {0, 255, 0, 254})});
    CHECK(npcr(one_diff, one_diff_b) == 25.0);
}

TEST_CASE("metrics match the brute-force oracle on random pairs") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 100; ++trial) {
        const RasterImage a = random_gray(8, 8, rng);
        const RasterImage b = random_gray(8, 8, rng);
        const OracleMetrics want = oracle_evaluate(a, b);

        CHECK(close_rel(correlation(a, b).value, want.cr, 1e-9));
        CHECK(close_rel(mse(a, b), want.mse, 1e-9));
        CHECK(close_rel(rmse(a, b), want.rmse, 1e-9));
        CHECK(close_rel(psnr(a, b), want.psnr, 1e-9));
        CHECK(close_rel(ssim(a, b), want.ssim, 1e-9));
        CHECK(close_rel(mae(a, b), want.mae, 1e-9));
        CHECK(close_rel(npcr(a, b), want.npcr, 1e-9));
        CHECK(close_rel(uaci(a, b), want.uaci, 1e-9));
    }
}

TEST_CASE("all metrics are symmetric") {
    std::mt19937_64 rng(271);
    const RasterImage a = random_gray(12, 9, rng);
    const RasterImage b = random_gray(12, 9, rng);

    CHECK(correlation(a, b).value == correlation(b, a).value);
    CHECK(mse(a, b) == mse(b, a));
    CHECK(rmse(a, b) == rmse(b, a));
    CHECK(psnr(a, b) == psnr(b, a));
    CHECK(ssim(a, b) == ssim(b, a));
    CHECK(mae(a, b) == mae(b, a));
    CHECK(npcr(a, b) == npcr(b, a));
    CHECK(uaci(a, b) == uaci(b, a));
}

TEST_CASE("shifting both images by a constant leaves the error metrics alone") {
    std::mt19937_64 rng(161);
    // values kept in [0, 200] so the +55 shift cannot clamp
    std::vector<std::uint8_t> va(64), vb(64);
    for (auto& v : va)
        v = static_cast<std::uint8_t>(rng() % 201);
    for (auto& v : vb)
        v = static_cast<std::uint8_t>(rng() % 201);
    auto shifted = [](std::vector<std::uint8_t> v) {
        for (auto& x : v)
            x = static_cast<std::uint8_t>(x + 55);
        return v;
    };
    const RasterImage a({ChannelPlane(8, 8, va)});
    const RasterImage b({ChannelPlane(8, 8, vb)});
    const RasterImage a_shift({ChannelPlane(8, 8, shifted(va))});
    const RasterImage b_shift({ChannelPlane(8, 8, shifted(vb))});

    CHECK(mae(a, b) == mae(a_shift, b_shift));
    CHECK(mse(a, b) == mse(a_shift, b_shift));
    CHECK(rmse(a, b) == rmse(a_shift, b_shift));
    CHECK(npcr(a, b) == npcr(a_shift, b_shift));
    CHECK(uaci(a, b) == uaci(a_shift, b_shift));
    // integer-exact numerators make Pearson translation invariance exact
    CHECK(correlation(a, b).value == correlation(a_shift, b_shift).value);
}

TEST_CASE("npcr complements the equal-pixel fraction") {
    std::mt19937_64 rng(99);
    const RasterImage a = random_gray(10, 10, rng);
    const RasterImage b = random_gray(10, 10, rng);
    std::size_t equal = 0;
    for (std::size_t i = 0; i < 100; ++i)
        equal += a.channel(0).pixels()[i] == b.channel(0).pixels()[i] ? 1 : 0;
    CHECK(npcr(a, b) + 100.0 * static_cast<double>(equal) / 100.0 == doctest::Approx(100.0));
}

TEST_CASE("color metrics average the three channels") {
    std::mt19937_64 rng(55);
    const RasterImage a = natural_color(6, 6, 9);
    const RasterImage b = natural_color(6, 6, 40);

    double mae_sum = 0.0, npcr_sum = 0.0, cr_sum = 0.0, ssim_sum = 0.0;
    for (int c = 0; c < 3; ++c) {
        const RasterImage ac({a.channel(c)});
        const RasterImage bc({b.channel(c)});
        mae_sum += mae(ac, bc);
        npcr_sum += npcr(ac, bc);
        cr_sum += correlation(ac, bc).value;
        ssim_sum += ssim(ac, bc);
    }
    CHECK(mae(a, b) == doctest::Approx(mae_sum / 3.0).epsilon(1e-12));
    CHECK(npcr(a, b) == doctest::Approx(npcr_sum / 3.0).epsilon(1e-12));
    CHECK(correlation(a, b).value == doctest::Approx(cr_sum / 3.0).epsilon(1e-12));
    CHECK(ssim(a, b) == doctest::Approx(ssim_sum / 3.0).epsilon(1e-12));
}

TEST_CASE("metric operations reject shape mismatches") {
    const RasterImage a = natural_gray(4, 4);
    const RasterImage b = natural_gray(4, 5);
    const RasterImage c = natural_color(4, 4);
    CHECK_THROWS_AS(mse(a, b), ArgumentError);
    CHECK_THROWS_AS(correlation(a, c), ArgumentError);
    CHECK_THROWS_AS(evaluate_pair(a, b), ArgumentError);
}

TEST_CASE("histogram bin counts") {
    const RasterImage zeros({ChannelPlane(10, 10)});
    const HistogramSet hz = histogram(zeros);
    CHECK(hz.channels[0][0] == 100);
    for (int bin = 1; bin < 256; ++bin)
        CHECK(hz.channels[0][static_cast<std::size_t>(bin)] == 0);

    std::vector<std::uint8_t> ramp(256);
    for (int i = 0; i < 256; ++i)
        ramp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    const HistogramSet hr = histogram(RasterImage({ChannelPlane(16, 16, ramp)}));
    for (int bin = 0; bin < 256; ++bin)
        CHECK(hr.channels[0][static_cast<std::size_t>(bin)] == 1);

    const RasterImage nat = natural_color(37, 23);
    const HistogramSet hn = histogram(nat);
    for (const auto& bins : hn.channels) {
        std::uint64_t total = 0;
        for (std::uint64_t c : bins)
            total += c;
        CHECK(total == 37u * 23u);
    }
}

TEST_CASE("evaluate_pair on identical images yields the ideal row") {
    const RasterImage s = natural_gray(32, 32);
    const MetricsReport r = evaluate_pair(s, s);
    CHECK(r.cr == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.mae == 0.0);
    CHECK(r.npcr_percent == 0.0);
    CHECK(r.psnr_is_infinite());
    CHECK(r.rmse == 0.0);
    CHECK(r.ssim == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.uaci_percent == 0.0);
    CHECK(r.mse == 0.0);
    CHECK(!r.degenerate_cr);
}

TEST_CASE("evaluate_pair on the anti-correlated pair") {
    const MetricsReport r = evaluate_pair(anti_a(), anti_b());
    CHECK(r.cr == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.mae == 255.0);
    CHECK(r.npcr_percent == 100.0);
    CHECK(r.psnr_db == 0.0);
    CHECK(r.rmse == 255.0);
    CHECK(r.uaci_percent == 100.0);
}

TEST_CASE("evaluate_pair keeps its internal identities") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 50; ++trial) {
        const RasterImage a = random_gray(7, 5, rng);
        const RasterImage b = random_gray(7, 5, rng);
        const MetricsReport r = evaluate_pair(a, b);
        CHECK(close_rel(r.uaci_percent, 100.0 * r.mae / 255.0, 1e-9));
        CHECK(close_rel(r.rmse, std::sqrt(r.mse), 1e-9));
        CHECK((r.mse == 0.0) == r.psnr_is_infinite());
        CHECK((r.mse == 0.0) == (r.npcr_percent == 0.0));
    }
}

TEST_CASE("evaluate_pair flags degenerate correlation") {
    const RasterImage constant({ChannelPlane(4, 4, std::vector<std::uint8_t>(16, 42))});
    const RasterImage varied = natural_gray(4, 4);
    const MetricsReport r = evaluate_pair(constant, varied);
    CHECK(r.cr == 0.0);
    CHECK(r.degenerate_cr);
}
