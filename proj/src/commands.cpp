/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include "cbrw/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "cbrw/keyfile.hpp"
#include "cbrw/metrics.hpp"
#include "cbrw/pnm.hpp"
#include "cbrw/rwm.hpp"

namespace cbrw {

namespace fs = std::filesystem;

std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& filename) {
    return base_seed ^ fnv1a64(std::string_view(filename));
}

int cmd_keygen(const KeygenOptions& opt) {
    const OffsetGrid key =
        generate_offset_grid(opt.width, opt.height, opt.channels, opt.seed, opt.bound);
    write_key(key, opt.out);
    return 0;
}

int cmd_enroll(const EnrollOptions& opt) {
    const RasterImage image = read_image(opt.image);
    const OffsetGrid key = read_key(opt.key);
    const CancelableTemplate tmpl = enroll(image, key, opt.method);
    write_image(tmpl.image, opt.out);
    return 0;
}

int cmd_evaluate(const EvaluateOptions& opt) {
    const RasterImage original = read_image(opt.original);
    const RasterImage tmpl = read_image(opt.tmpl);
    ReportRow row{fs::path(opt.original).filename().string(), "-",
                  evaluate_pair(original, tmpl)};
    write_report({row}, opt.out, opt.format);
    return 0;
}

namespace {

// Minimal shell-style matching: '*' any run, '?' any single character.
bool glob_match(const std::string& pattern, const std::string& name) {
    std::size_t p = 0, s = 0;
    std::size_t star = std::string::npos, star_s = 0;
    while (s < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[s])) {
            ++p;
            ++s;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            star_s = s;
        } else if (star != std::string::npos) {
            p = star + 1;
            s = ++star_s;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*')
        ++p;
    return p == pattern.size();
}

unsigned batch_worker_count(std::size_t jobs) {
    unsigned workers = 0;
    if (const char* env = std::getenv("CBRW_THREADS"))
        workers = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0)
            workers = 1;
    }
    return static_cast<unsigned>(std::min<std::size_t>(workers, jobs));
}

std::string template_filename(const fs::path& source, Method method, bool color) {
    return source.stem().string() + "_" + to_string(method) + (color ? ".ppm" : ".pgm");
}

} // namespace

int cmd_batch(const BatchOptions& opt, std::ostream& diag) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opt.input_dir)) {
        if (entry.is_regular_file() && glob_match(opt.glob, entry.path().filename().string()))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    if (files.empty())
        throw ArgumentError("no files in " + opt.input_dir + " match \"" + opt.glob + "\"");

    if (!opt.out_dir.empty())
        fs::create_directories(opt.out_dir);

    // The shared key of --single-key mode takes its dimensions from the
    // first readable image; images of other sizes become row-level errors.
    std::optional<OffsetGrid> shared_key;
    if (opt.single_key) {
        for (const fs::path& f : files) {
            try {
                const RasterImage probe = read_image(f.string());
                shared_key = generate_offset_grid(probe.width(), probe.height(),
                                                  probe.channel_count(), opt.base_seed,
                                                  opt.bound);
                break;
            } catch (const std::exception&) {
                // Recorded again below when the per-row processing hits it.
            }
        }
        if (!shared_key)
            throw ArgumentError("no readable image in " + opt.input_dir +
                                " to size the shared key");
    }

    std::vector<std::optional<ReportRow>> rows(files.size());
    std::vector<std::string> errors(files.size());
    std::atomic<std::size_t> next{0};

    const auto process = [&](std::size_t i) {
        const fs::path& path = files[i];
        const std::string filename = path.filename().string();
        try {
            const RasterImage image = read_image(path.string());
            const OffsetGrid key =
                opt.single_key
                    ? *shared_key
                    : generate_offset_grid(image.width(), image.height(), image.channel_count(),
                                           derive_seed(opt.base_seed, filename), opt.bound);
            const CancelableTemplate tmpl = enroll(image, key, opt.method);
            if (!opt.out_dir.empty())
                write_image(tmpl.image,
                            (fs::path(opt.out_dir) /
                             template_filename(path, opt.method, image.is_color()))
                                .string());
            rows[i] = ReportRow{filename, to_string(opt.method),
                                evaluate_pair(image, tmpl.image)};
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    const unsigned workers = batch_worker_count(files.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i)
            process(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < files.size();
                     i = next.fetch_add(1))
                    process(i);
            });
        }
        for (std::thread& t : pool)
            t.join();
    }

    std::vector<ReportRow> good;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (rows[i]) {
            good.push_back(std::move(*rows[i]));
        } else {
            ++failed;
            diag << "error: " << files[i].filename().string() << ": " << errors[i] << '\n';
        }
    }
    if (good.empty())
        throw ArgumentError("every file in the batch failed");
    write_report(good, opt.report, opt.format);
    return failed == 0 ? 0 : 1;
}

int cmd_diversity(const DiversityOptions& opt) {
    const RasterImage image = read_image(opt.image);
    const auto key_for = [&](std::uint64_t seed) {
        return generate_offset_grid(image.width(), image.height(), image.channel_count(), seed,
                                    opt.bound);
    };
    const CancelableTemplate a = enroll(image, key_for(opt.seed_a), opt.method);
    const CancelableTemplate b = enroll(image, key_for(opt.seed_b), opt.method);
    ReportRow row{fs::path(opt.image).filename().string(), to_string(opt.method),
                  evaluate_pair(a.image, b.image)};
    write_report({row}, opt.out, opt.format);
    return 0;
}

int cmd_histogram(const HistogramOptions& opt) {
    const RasterImage image = read_image(opt.image);
    const HistogramSet set = histogram(image);

    std::ofstream out(opt.out, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + opt.out + " for writing");
    out << "channel,bin,count\n";
    for (std::size_t c = 0; c < set.channels.size(); ++c)
        for (std::size_t bin = 0; bin < 256; ++bin)
            out << c << ',' << bin << ',' << set.channels[c][bin] << '\n';
    out.flush();
    if (!out)
        throw IoError("write failure on " + opt.out);
    return 0;
}

} // namespace cbrw
