#pragma once

#include <optional>
#include <string>
#include <vector>

namespace citerank {

// ============================================================================
// Core dataset records
// ============================================================================

enum class Rank { Assistant, Associate, Full };

// Senior faculty (associate and full professors) drive every program measure;
// assistants are carried through for validation and synthesis only.
inline bool is_senior(Rank r) { return r != Rank::Assistant; }

const char* rank_name(Rank r);
Rank rank_from_string(const std::string& s); // throws ParseError-free invalid_argument

struct FacultyRecord {
    std::string university_id;
    std::string name;
    Rank rank = Rank::Assistant;
    std::optional<long long> t10;     // absent when no public citation profile
    bool has_profile = false;
    std::optional<long long> h_index; // optional even when profiled
};

struct ProgramRecord {
    std::string university_id;
    std::string name;
    std::optional<double> usn_cs_score;          // absent for unranked programs
    std::optional<double> usn_university_score;  // absent when unknown
};

struct Dataset {
    std::vector<ProgramRecord> programs;
    std::vector<FacultyRecord> faculty;
};

// ============================================================================
// Published-ranking fixture row
// ============================================================================

struct Table7Row {
    int rank = 0;
    std::string university;
    int size = 0;          // senior faculty with a t10 value
    long long m10 = 0;
    long long g10 = 0;
    long long c40 = 0;
    long long c60 = 0;
    double usn = 0.0;      // 0.0 marks "not ranked"
    double scholar = 0.0;
};

// ============================================================================
// Validation summary
// ============================================================================

struct ProgramCoverage {
    std::string university_id;
    int faculty_total = 0;
    int senior_total = 0;
    int senior_with_t10 = 0;
    bool measures_defined = false; // at least one senior with a t10 value
};

struct ValidationReport {
    int programs = 0;
    int faculty_total = 0;
    int assistants = 0;
    int associates = 0;
    int full_professors = 0;
    int with_profile = 0;
    int with_t10 = 0;
    int seniors = 0;
    int seniors_with_t10 = 0;
    double profile_coverage = 0.0;        // with_profile / faculty_total
    double t10_coverage = 0.0;            // with_t10 / faculty_total
    double senior_t10_coverage = 0.0;     // seniors_with_t10 / seniors
    std::vector<ProgramCoverage> per_program;
    std::vector<std::string> warnings;    // e.g. programs with no senior t10 values
};

} // namespace citerank
