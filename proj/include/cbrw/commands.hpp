/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_COMMANDS_HPP
#define CBRW_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cbrw/report.hpp"
#include "cbrw/template.hpp"

namespace cbrw {

// Command implementations behind the cbrw CLI. Each returns the process
// exit code for its success paths; precondition violations and broken
// inputs surface as exceptions for the front end to map to exit code 1.

struct KeygenOptions {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::uint64_t seed = 0;
    std::int32_t bound = 127;
    std::string out;
};

int cmd_keygen(const KeygenOptions& opt);

struct EnrollOptions {
    std::string image;
    std::string key;
    Method method = Method::BitXor;
    std::string out;
};

int cmd_enroll(const EnrollOptions& opt);

struct EvaluateOptions {
    std::string original;
    std::string tmpl;
    std::string out;
    ReportFormat format = ReportFormat::Csv;
};

int cmd_evaluate(const EvaluateOptions& opt);

// Batch enrollment + evaluation over a directory. Seeds default to
// per-image derivation (base ^ fnv1a64(filename)) so one base seed covers a
// dataset reproducibly while every image gets its own key; --single-key
// switches to one shared key generated from the base seed. Images are
// processed in parallel (CBRW_THREADS caps the workers, 0 = auto) and rows
// are reported in filename order regardless of scheduling. Files that fail
// to process are recorded on `diag` and the command returns 1.
struct BatchOptions {
    std::string input_dir;
    std::string glob = "*";
    Method method = Method::BitXor;
    std::uint64_t base_seed = 0;
    bool single_key = false;
    std::int32_t bound = 127;
    std::string out_dir;  // empty: templates are not persisted
    std::string report;
    ReportFormat format = ReportFormat::Csv;
};

int cmd_batch(const BatchOptions& opt, std::ostream& diag);

// Two enrollments of one image under different seeds, evaluated against
// each other: the template-vs-template dissimilarity check.
struct DiversityOptions {
    std::string image;
    std::uint64_t seed_a = 0;
    std::uint64_t seed_b = 0;
    std::int32_t bound = 127;
    Method method = Method::BitXor;
    std::string out;
    ReportFormat format = ReportFormat::Csv;
};

int cmd_diversity(const DiversityOptions& opt);

struct HistogramOptions {
    std::string image;
    std::string out;
};

int cmd_histogram(const HistogramOptions& opt);

// Seed for one file under the per-image derivation policy.
std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& filename);

} // namespace cbrw

#endif
