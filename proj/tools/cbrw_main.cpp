/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cbrw/commands.hpp"

namespace {

constexpr int kExitRuntimeError = 1;
constexpr int kExitUsageError = 2;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cancelable biometric templates via 1-D random-walk transforms"};
    app.require_subcommand(1);

    const auto method_choice = CLI::IsMember({"xor", "cmp"});
    const auto format_choice = CLI::IsMember({"csv", "json"});

    cbrw::KeygenOptions keygen;
    CLI::App* keygen_cmd = app.add_subcommand("keygen", "Generate a random offset key file");
    keygen_cmd->add_option("--width", keygen.width, "Key width in pixels")
        ->required()
        ->check(CLI::Range(1, 1000000000));
    keygen_cmd->add_option("--height", keygen.height, "Key height in pixels")
        ->required()
        ->check(CLI::Range(1, 1000000000));
    keygen_cmd->add_option("--channels", keygen.channels, "Channel count (1 or 3)")
        ->default_val(1)
        ->check(CLI::IsMember({1, 3}));
    keygen_cmd->add_option("--seed", keygen.seed, "Generator seed")->required();
    keygen_cmd->add_option("--bound", keygen.bound, "Offsets drawn from [-bound, bound]")
        ->default_val(127)
        ->check(CLI::Range(1, 1000000000));
    keygen_cmd->add_option("--out", keygen.out, "Key file path")->required();

    cbrw::EnrollOptions enroll;
    std::string enroll_method = "xor";
    CLI::App* enroll_cmd = app.add_subcommand("enroll", "Generate a cancelable template");
    enroll_cmd->add_option("--image", enroll.image, "Input image (PGM/PPM)")->required();
    enroll_cmd->add_option("--key", enroll.key, "Key file")->required();
    enroll_cmd->add_option("--method", enroll_method, "xor or cmp")
        ->required()
        ->check(method_choice);
    enroll_cmd->add_option("--out", enroll.out, "Template image path")->required();

    cbrw::EvaluateOptions evaluate;
    std::string evaluate_format = "csv";
    CLI::App* evaluate_cmd =
        app.add_subcommand("evaluate", "Compute dissimilarity metrics for an image pair");
    evaluate_cmd->add_option("--original", evaluate.original, "Original image")->required();
    evaluate_cmd->add_option("--template", evaluate.tmpl, "Template image")->required();
    evaluate_cmd->add_option("--out", evaluate.out, "Report path")->required();
    evaluate_cmd->add_option("--format", evaluate_format, "csv or json")
        ->default_val("csv")
        ->check(format_choice);

    cbrw::BatchOptions batch;
    std::string batch_method = "xor";
    std::string batch_format = "csv";
    CLI::App* batch_cmd =
        app.add_subcommand("batch", "Enroll and evaluate every image in a directory");
    batch_cmd->add_option("--input", batch.input_dir, "Input directory")->required();
    batch_cmd->add_option("--glob", batch.glob, "Filename pattern (* and ?)")->default_val("*");
    batch_cmd->add_option("--method", batch_method, "xor or cmp")->required()->check(method_choice);
    batch_cmd->add_option("--seed", batch.base_seed, "Base seed")->required();
    batch_cmd->add_flag("--single-key", batch.single_key,
                        "Share one key instead of deriving one per image");
    batch_cmd->add_option("--bound", batch.bound, "Offsets drawn from [-bound, bound]")
        ->default_val(127)
        ->check(CLI::Range(1, 1000000000));
    batch_cmd->add_option("--out-dir", batch.out_dir, "Directory for template images (optional)");
    batch_cmd->add_option("--report", batch.report, "Report path")->required();
    batch_cmd->add_option("--format", batch_format, "csv or json")
        ->default_val("csv")
        ->check(format_choice);

    cbrw::DiversityOptions diversity;
    std::string diversity_method = "xor";
    std::string diversity_format = "csv";
    CLI::App* diversity_cmd = app.add_subcommand(
        "diversity", "Compare two templates of one image under different seeds");
    diversity_cmd->add_option("--image", diversity.image, "Input image")->required();
    diversity_cmd->add_option("--seed-a", diversity.seed_a, "First key seed")->required();
    diversity_cmd->add_option("--seed-b", diversity.seed_b, "Second key seed")->required();
    diversity_cmd->add_option("--bound", diversity.bound, "Offsets drawn from [-bound, bound]")
        ->default_val(127)
        ->check(CLI::Range(1, 1000000000));
    diversity_cmd->add_option("--method", diversity_method, "xor or cmp")
        ->required()
        ->check(method_choice);
    diversity_cmd->add_option("--out", diversity.out, "Report path")->required();
    diversity_cmd->add_option("--format", diversity_format, "csv or json")
        ->default_val("csv")
        ->check(format_choice);

    cbrw::HistogramOptions hist;
    CLI::App* hist_cmd = app.add_subcommand("histogram", "Export per-channel histograms as CSV");
    hist_cmd->add_option("--image", hist.image, "Input image")->required();
    hist_cmd->add_option("--out", hist.out, "CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    try {
        if (keygen_cmd->parsed())
            return cbrw::cmd_keygen(keygen);
        if (enroll_cmd->parsed()) {
            enroll.method = cbrw::method_from_string(enroll_method);
            return cbrw::cmd_enroll(enroll);
        }
        if (evaluate_cmd->parsed()) {
            evaluate.format = cbrw::report_format_from_string(evaluate_format);
            return cbrw::cmd_evaluate(evaluate);
        }
        if (batch_cmd->parsed()) {
            batch.method = cbrw::method_from_string(batch_method);
            batch.format = cbrw::report_format_from_string(batch_format);
            return cbrw::cmd_batch(batch, std::cerr);
        }
        if (diversity_cmd->parsed()) {
            diversity.method = cbrw::method_from_string(diversity_method);
            diversity.format = cbrw::report_format_from_string(diversity_format);
            return cbrw::cmd_diversity(diversity);
        }
        if (hist_cmd->parsed())
            return cbrw::cmd_histogram(hist);
    } catch (const std::exception& e) {
        std::cerr << "cbrw: " << e.what() << '\n';
        return kExitRuntimeError;
    }
    return kExitUsageError;
}
