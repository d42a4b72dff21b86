// Command-line front end: ingestion, measures, model fitting, scoring,
// ranking, report bundles, the embedded-fixture replay, and synthetic data.
#include <functional>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "citerank/errors.hpp"
#include "citerank/run.hpp"

namespace {

using citerank::RunConfig;

// Exit codes: 0 success, 1 failed checks or bad data, 2 I/O or usage errors.
enum ExitCode { kOk = 0, kDataError = 1, kUsageError = 2 };

void add_faculty(CLI::App* sub, RunConfig& config, bool required = true) {
    auto* opt = sub->add_option("--faculty", config.faculty_path,
                                "faculty CSV (university,name,rank,t10,has_profile,h_index)");
    if (required) opt->required();
}

void add_programs(CLI::App* sub, RunConfig& config, bool required = false) {
    auto* opt = sub->add_option("--programs", config.programs_path,
                                "programs CSV (university,name,usn_cs_score,usn_university_score)");
    if (required) opt->required();
}

void add_out(CLI::App* sub, RunConfig& config) {
    sub->add_option("--out", config.out_dir, "output directory")
        ->capture_default_str();
}

void add_training_flags(CLI::App* sub, RunConfig& config) {
    sub->add_option("--min-usn", config.min_usn,
                    "lowest peer score admitted to training")
        ->capture_default_str();
}

void add_report_flags(CLI::App* sub, RunConfig& config) {
    sub->add_option("--split", config.split, "high/low group boundary")
        ->capture_default_str();
    sub->add_option("--default-usn", config.default_usn,
                    "score substituted for unranked programs in plots")
        ->capture_default_str();
    sub->add_option("--default-univ-score", config.default_university_score,
                    "university score substituted when absent")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"citation analytics for doctoral-program rankings"};
    app.require_subcommand(1);

    RunConfig config;
    std::function<int(const RunConfig&, std::ostream&)> command;

    auto* validate = app.add_subcommand("validate", "parse inputs and print a dataset summary");
    add_faculty(validate, config);
    add_programs(validate, config);
    validate->callback([&] { command = citerank::cmd_validate; });

    auto* measures = app.add_subcommand("measures", "compute per-program citation measures");
    add_faculty(measures, config);
    add_programs(measures, config);
    add_out(measures, config);
    measures->callback([&] { command = citerank::cmd_measures; });

    auto* fit = app.add_subcommand("fit", "train the averaged regression model");
    add_faculty(fit, config);
    add_programs(fit, config, /*required=*/true);
    add_training_flags(fit, config);
    add_out(fit, config);
    fit->callback([&] { command = citerank::cmd_fit; });

    auto* score = app.add_subcommand("score", "score and rank programs with a saved model");
    add_faculty(score, config);
    add_programs(score, config);
    score->add_option("--model", config.model_path, "model JSON from `fit`")->required();
    add_out(score, config);
    score->callback([&] { command = citerank::cmd_score; });

    auto* rank = app.add_subcommand("rank", "fit a model and rank programs in one run");
    add_faculty(rank, config);
    add_programs(rank, config, /*required=*/true);
    add_training_flags(rank, config);
    add_out(rank, config);
    rank->callback([&] { command = citerank::cmd_rank; });

    auto* report = app.add_subcommand("report", "emit the full analysis bundle");
    add_faculty(report, config);
    add_programs(report, config, /*required=*/true);
    add_training_flags(report, config);
    add_report_flags(report, config);
    add_out(report, config);
    report->callback([&] { command = citerank::cmd_report; });

    auto* reproduce = app.add_subcommand(
        "reproduce", "replay the published ranking from the embedded fixture");
    add_training_flags(reproduce, config);
    add_report_flags(reproduce, config);
    add_out(reproduce, config);
    reproduce->callback([&] { command = citerank::cmd_reproduce; });

    auto* synth = app.add_subcommand("synth", "generate a synthetic faculty population");
    synth->add_option("--n", config.n, "population size")->capture_default_str();
    synth->add_option("--seed", config.seed, "generator seed")->capture_default_str();
    add_out(synth, config);
    synth->callback([&] { command = citerank::cmd_synth; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints help or the usage error
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        return command(config, std::cout);
    } catch (const citerank::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
}
