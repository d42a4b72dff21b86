#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citerank/types.hpp"

namespace citerank {

// ============================================================================
// Competition ranking
// ============================================================================

struct ScoredProgram {
    std::string university_id;
    double display_score = 0.0;        // one decimal
    double raw_score = 0.0;            // unrounded model output
    std::optional<double> usn_score;   // absent for unranked programs
};

struct RankingEntry {
    int rank = 0;                      // 1 + count of strictly better scores
    std::string university_id;
    double display_score = 0.0;
    double raw_score = 0.0;
    std::optional<double> usn_score;
    std::optional<double> delta;       // display_score - usn_score
};

// Competition ranking on display_score descending: equal scores share the
// minimal rank, ties listed alphabetically. Input order does not matter.
std::vector<RankingEntry> rank_programs(std::span<const ScoredProgram> scores);

// CSV with header rank,university,scholar,usn,delta (scores at 1 decimal;
// usn/delta empty for unranked programs).
std::string rankings_csv(std::span<const RankingEntry> entries);

// ============================================================================
// Group correlations and discrepancies
// ============================================================================

struct ProgramScore {
    std::string university_id;
    double score = 0.0;                // model score
    std::optional<double> usn;         // peer-assessment score
};

struct GroupStats {
    std::size_t count = 0;
    std::optional<double> pearson;     // absent when the group is degenerate
    std::string note;                  // "insufficient" when pearson is absent
};

struct GroupReport {
    GroupStats high;                   // usn >= split
    GroupStats low;                    // min_usn <= usn < split
};

// Splits the ranked subset at `split` and correlates model scores with usn
// within each side. Requires split > min_usn. A group with fewer than 3
// members or zero variance is marked "insufficient" instead of erroring.
GroupReport group_correlations(std::span<const ProgramScore> programs,
                               double split, double min_usn);

struct Discrepancy {
    std::string university_id;
    double scholar = 0.0;              // display score
    double usn = 0.0;                  // usn or the default substitute
    double delta = 0.0;                // scholar - usn
};

// delta = display score - (usn if present else default_usn), sorted by
// |delta| descending, then university ascending for determinism.
std::vector<Discrepancy> discrepancy_report(std::span<const ProgramScore> programs,
                                            double default_usn);

// ============================================================================
// Profile-coverage bias
// ============================================================================

// Per-percentile-decile counts of (with profile, without profile).
struct BiasTable {
    std::array<std::pair<int, int>, 10> deciles{};
};

// Assigns each senior faculty a decile by their t10 percentile among the
// OTHER seniors (leave-one-out keeps a unique maximum out of decile 10 and
// puts a singleton in decile 0), then tallies profile flags per decile.
// Faculty without t10 are skipped.
BiasTable bias_table(std::span<const FacultyRecord> seniors);

// ============================================================================
// Plot-ready data
// ============================================================================

// CSV with header university,score,usn: one row per program sorted by
// university, score at 3 decimals, usn (or default) at 1 decimal.
std::string scatter_csv(std::span<const ProgramScore> programs, double default_usn);

} // namespace citerank
