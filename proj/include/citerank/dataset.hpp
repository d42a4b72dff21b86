#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "citerank/types.hpp"

namespace citerank {

// ============================================================================
// CSV ingestion
// ============================================================================

// Expected header: university,name,rank,t10,has_profile,h_index
// t10 and h_index may be empty; has_profile is 0/1 or true/false.
std::vector<FacultyRecord> parse_faculty_csv(std::string_view text);

// Expected header: university,name,usn_cs_score,usn_university_score
// usn_cs_score may be empty (unranked program).
std::vector<ProgramRecord> parse_programs_csv(std::string_view text);

std::string serialize_faculty_csv(const std::vector<FacultyRecord>& faculty);
std::string serialize_programs_csv(const std::vector<ProgramRecord>& programs);

// Pairs a program list with a faculty list. Throws DatasetError when a faculty
// record names a university that is missing from the program list.
Dataset make_dataset(std::vector<ProgramRecord> programs,
                     std::vector<FacultyRecord> faculty);

// Builds minimal program records from the distinct university ids appearing in
// a faculty list (insertion order, no USN data).
std::vector<ProgramRecord> implied_programs(const std::vector<FacultyRecord>& faculty);

// Counts, coverage fractions, and per-program summaries; appends a warning for
// every program whose measures would be undefined.
ValidationReport validate(const Dataset& data);

// Sorted t10 values of all profiled senior faculty across the dataset.
std::vector<long long> senior_t10_values(const std::vector<FacultyRecord>& faculty);

// ============================================================================
// Published-ranking fixture
// ============================================================================

// The fixture ships inside the library so every build can replay the published
// ranking without external data files.
std::string_view table7_fixture_csv();

// Parses rank,university,size,m10,g10,c40,c60,usn,scholar rows.
std::vector<Table7Row> parse_table7_csv(std::string_view text);

// Convenience: parse_table7_csv(table7_fixture_csv()).
std::vector<Table7Row> load_table7_fixture();

} // namespace citerank
