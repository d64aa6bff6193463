/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "cbrw/errors.hpp"

namespace cbrw {

namespace {

std::string cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string psnr_cell(double v) {
    return std::isinf(v) ? "Inf" : cell(v);
}

double round4(double v) {
    return std::round(v * 10000.0) / 10000.0;
}

nlohmann::json row_json(const ReportRow& row) {
    nlohmann::json j{
        {"image", row.image},     {"method", row.method},
        {"cr", round4(row.metrics.cr)},         {"mae", round4(row.metrics.mae)},
        {"npcr", round4(row.metrics.npcr_percent)}, {"rmse", round4(row.metrics.rmse)},
        {"ssim", round4(row.metrics.ssim)},     {"uaci", round4(row.metrics.uaci_percent)},
    };
    if (row.metrics.psnr_is_infinite())
        j["psnr"] = nullptr;
    else
        j["psnr"] = round4(row.metrics.psnr_db);
    return j;
}

} // namespace

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "json")
        return ReportFormat::Json;
    throw ArgumentError("unknown report format \"" + name + "\" (expected csv or json)");
}

ReportSummary summarize(const std::vector<ReportRow>& rows) {
    if (rows.empty())
        throw ArgumentError("summarize: no rows");

    ReportSummary summary;
    MetricsReport& avg = summary.average.metrics;
    const auto n = static_cast<double>(rows.size());

    double psnr_total = 0.0;
    std::size_t psnr_finite = 0;
    std::string method = rows.front().method;
    for (const ReportRow& row : rows) {
        avg.cr += row.metrics.cr;
        avg.mae += row.metrics.mae;
        avg.npcr_percent += row.metrics.npcr_percent;
        avg.rmse += row.metrics.rmse;
        avg.ssim += row.metrics.ssim;
        avg.uaci_percent += row.metrics.uaci_percent;
        avg.mse += row.metrics.mse;
        avg.degenerate_cr = avg.degenerate_cr || row.metrics.degenerate_cr;
        if (row.metrics.psnr_is_infinite()) {
            ++summary.psnr_infinite_count;
        } else {
            psnr_total += row.metrics.psnr_db;
            ++psnr_finite;
        }
        if (row.method != method)
            method = "-";
    }
    avg.cr /= n;
    avg.mae /= n;
    avg.npcr_percent /= n;
    avg.rmse /= n;
    avg.ssim /= n;
    avg.uaci_percent /= n;
    avg.mse /= n;
    avg.psnr_db = psnr_finite > 0 ? psnr_total / static_cast<double>(psnr_finite)
                                  : std::numeric_limits<double>::infinity();
    summary.average.image = "AVERAGE";
    summary.average.method = method;
    return summary;
}

void write_report(const std::vector<ReportRow>& rows, const std::string& path,
                  ReportFormat format) {
    const ReportSummary summary = summarize(rows);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");

    if (format == ReportFormat::Csv) {
        out << "image,method,cr,mae,npcr,psnr,rmse,ssim,uaci\n";
        const auto emit = [&out](const ReportRow& row) {
            const MetricsReport& m = row.metrics;
            out << row.image << ',' << row.method << ',' << cell(m.cr) << ',' << cell(m.mae)
                << ',' << cell(m.npcr_percent) << ',' << psnr_cell(m.psnr_db) << ','
                << cell(m.rmse) << ',' << cell(m.ssim) << ',' << cell(m.uaci_percent) << '\n';
        };
        for (const ReportRow& row : rows)
            emit(row);
        emit(summary.average);
    } else {
        nlohmann::json doc;
        doc["rows"] = nlohmann::json::array();
        for (const ReportRow& row : rows)
            doc["rows"].push_back(row_json(row));
        nlohmann::json avg = row_json(summary.average);
        avg.erase("image");
        avg["psnr_infinite_count"] = summary.psnr_infinite_count;
        doc["summary"] = avg;
        out << doc.dump(2) << '\n';
    }
    out.flush();
    if (!out)
        throw IoError("write failure on " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

double parse_metric(const std::string& cell_text) {
    if (cell_text == "Inf")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double v = std::stod(cell_text, &used);
        if (used != cell_text.size())
            throw FormatError("unparsed characters in numeric cell \"" + cell_text + "\"", 0);
        return v;
    } catch (const std::invalid_argument&) {
        throw FormatError("non-numeric report cell \"" + cell_text + "\"", 0);
    } catch (const std::out_of_range&) {
        throw FormatError("numeric report cell out of range \"" + cell_text + "\"", 0);
    }
}

} // namespace

ParsedReport read_report_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path + " for reading");

    std::string line;
    if (!std::getline(in, line))
        throw FormatError("empty report", 0);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "image,method,cr,mae,npcr,psnr,rmse,ssim,uaci")
        throw FormatError("unexpected report header", 0);

    ParsedReport parsed;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 9)
            throw FormatError("report row has " + std::to_string(cells.size()) +
                                  " cells, expected 9",
                              0);
        ReportRow row;
        row.image = cells[0];
        row.method = cells[1];
        row.metrics.cr = parse_metric(cells[2]);
        row.metrics.mae = parse_metric(cells[3]);
        row.metrics.npcr_percent = parse_metric(cells[4]);
        row.metrics.psnr_db = parse_metric(cells[5]);
        row.metrics.rmse = parse_metric(cells[6]);
        row.metrics.ssim = parse_metric(cells[7]);
        row.metrics.uaci_percent = parse_metric(cells[8]);
        row.metrics.mse = row.metrics.rmse * row.metrics.rmse;
        if (row.image == "AVERAGE")
            parsed.average = std::move(row);
        else
            parsed.rows.push_back(std::move(row));
    }
    return parsed;
}

} // namespace cbrw
