#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

// ============================================================================
// Command pipeline
// ============================================================================

// Flag-backed settings shared by every subcommand; defaults mirror the
// published study (training floor 2.0, top-group split 2.7, unranked plotted
// at 1.5, unknown university score 20).
struct RunConfig {
    std::string faculty_path;
    std::string programs_path;
    std::string model_path;
    std::string out_dir = ".";
    double min_usn = 2.0;
    double split = 2.7;
    double default_usn = 1.5;
    double default_university_score = 20.0;
    std::vector<int> Ns = {20, 40, 60, 80};
    std::uint64_t seed = 0;
    std::size_t n = 3330;
};

// Each command returns its exit code (0 success, 1 failed checks) and prints
// its human-readable summary to `out`. Domain and I/O failures surface as
// exceptions for the caller to map onto exit codes.
int cmd_validate(const RunConfig& config, std::ostream& out);   // dataset summary
int cmd_measures(const RunConfig& config, std::ostream& out);   // measures.csv
int cmd_fit(const RunConfig& config, std::ostream& out);        // model.json
int cmd_score(const RunConfig& config, std::ostream& out);      // rankings.csv from --model
int cmd_rank(const RunConfig& config, std::ostream& out);       // fit + score in one run
int cmd_report(const RunConfig& config, std::ostream& out);     // full report bundle
int cmd_reproduce(const RunConfig& config, std::ostream& out);  // embedded-fixture replay
int cmd_synth(const RunConfig& config, std::ostream& out);      // synthetic faculty.csv

// ============================================================================
// File I/O
// ============================================================================

// Whole-file read/write; failures throw IoError naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace citerank
