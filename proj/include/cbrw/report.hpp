/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_REPORT_HPP
#define CBRW_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cbrw/metrics.hpp"

namespace cbrw {

struct ReportRow {
    std::string image;
    std::string method; // "xor", "cmp", or "-" when not applicable
    MetricsReport metrics;
};

enum class ReportFormat {
    Csv,
    Json,
};

ReportFormat report_format_from_string(const std::string& name);

// The AVERAGE of a set of rows: arithmetic mean per metric. Infinite PSNR
// values are excluded from the PSNR mean and counted instead; if every row
// is infinite the average stays infinite.
struct ReportSummary {
    ReportRow average;                    // image == "AVERAGE"
    std::size_t psnr_infinite_count = 0;
};

ReportSummary summarize(const std::vector<ReportRow>& rows);

// CSV: header `image,method,cr,mae,npcr,psnr,rmse,ssim,uaci`, one row per
// image, then the AVERAGE row. Cells use fixed 4-decimal rendering and the
// literal `Inf` for infinite PSNR, so identical inputs produce identical
// bytes. JSON: the same rows with infinite PSNR as null, plus a summary
// object carrying psnr_infinite_count.
void write_report(const std::vector<ReportRow>& rows, const std::string& path,
                  ReportFormat format);

// Parsed CSV report; the AVERAGE row, when present, is split out.
struct ParsedReport {
    std::vector<ReportRow> rows;
    std::optional<ReportRow> average;
};

ParsedReport read_report_csv(const std::string& path);

} // namespace cbrw

#endif
