#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "citerank/types.hpp"

namespace citerank {

// ============================================================================
// Per-faculty indices
// ============================================================================

// Citations of the 10th highest-cited paper; 0 when fewer than 10 papers.
long long compute_t10(std::span<const long long> citation_counts);

// Largest h such that at least h papers have >= h citations.
long long compute_h_index(std::span<const long long> citation_counts);

// ============================================================================
// Population percentiles
// ============================================================================

// Pooled senior t10 values with percentile queries. Thresholds use the
// nearest-rank method (sorted ascending, index ceil(N/100 * n) - 1); a
// faculty's percentile is the strictly-below fraction times 100.
class SeniorPopulation {
public:
    explicit SeniorPopulation(std::vector<long long> t10_values); // sorts; throws StatsError if empty

    long long threshold(int n_percent) const;        // n_percent in (0, 100)
    double percentile_of(long long value) const;     // in [0, 100]

    std::size_t size() const { return values_.size(); }
    const std::vector<long long>& values() const { return values_; }

private:
    std::vector<long long> values_; // ascending
};

// Free-function forms used by tests and the report pipeline.
long long percentile_threshold(std::span<const long long> senior_t10, int n_percent);
double t10_percentile_of(long long value, std::span<const long long> senior_t10);

// ============================================================================
// Program measures
// ============================================================================

struct ProgramMeasures {
    std::string university_id;
    int size = 0;                 // faculty (any rank) with t10 present
    double m10 = 0.0;             // median senior t10
    double g10 = 1.0;             // geometric mean of (1 + t10) over seniors
    double p10 = 0.0;             // mean senior percentile, in [0, 100]
    std::map<int, int> c;         // N -> count of faculty with t10 >= threshold(N)
};

// Aggregates one program's faculty. Assistants never enter m10/g10/p10; every
// rank counts toward c[N]; faculty without t10 are excluded everywhere.
// Throws MeasuresUndefined when no senior faculty has a t10 value.
ProgramMeasures program_measures(std::span<const FacultyRecord> program_faculty,
                                 const SeniorPopulation& senior_population,
                                 std::span<const int> Ns);

struct MeasuresReport {
    std::vector<ProgramMeasures> measures;   // program order of the dataset
    std::vector<std::string> undefined;      // programs skipped (no senior t10)
};

// Computes measures for every program, pooling senior t10 across the whole
// dataset for the thresholds. The parallel form partitions by program, so its
// output is identical to the serial form regardless of thread count.
MeasuresReport compute_all_measures(const Dataset& data, std::span<const int> Ns);
MeasuresReport compute_all_measures_serial(const Dataset& data, std::span<const int> Ns);

// CSV with header university,size,m10,g10,p10,c20,c40,c60,c80 (g10/p10 at
// 3 decimals); column set follows Ns.
std::string measures_csv(const MeasuresReport& report, std::span<const int> Ns);

} // namespace citerank
