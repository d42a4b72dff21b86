#include "citerank/measures.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "citerank/csv.hpp"
#include "citerank/dataset.hpp"
#include "citerank/errors.hpp"

namespace citerank {

long long compute_t10(std::span<const long long> citation_counts) {
    if (citation_counts.size() < 10) return 0;
    std::vector<long long> sorted(citation_counts.begin(), citation_counts.end());
    // Only the 10th largest matters; partial sort beats a full sort.
    std::nth_element(sorted.begin(), sorted.begin() + 9, sorted.end(),
                     std::greater<long long>());
    return sorted[9];
}

long long compute_h_index(std::span<const long long> citation_counts) {
    std::vector<long long> sorted(citation_counts.begin(), citation_counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<long long>());
    long long h = 0;
    while (h < static_cast<long long>(sorted.size()) && sorted[h] >= h + 1) ++h;
    return h;
}

SeniorPopulation::SeniorPopulation(std::vector<long long> t10_values)
    : values_(std::move(t10_values)) {
    if (values_.empty()) throw StatsError("senior population is empty");
    std::sort(values_.begin(), values_.end());
}

long long SeniorPopulation::threshold(int n_percent) const {
    if (n_percent <= 0 || n_percent >= 100)
        throw StatsError("percentile must be in (0, 100)");
    // Nearest rank: smallest index covering N percent of the population.
    auto idx = static_cast<std::size_t>(
        std::ceil(n_percent / 100.0 * static_cast<double>(values_.size()))) - 1;
    return values_[idx];
}

double SeniorPopulation::percentile_of(long long value) const {
    auto below = std::lower_bound(values_.begin(), values_.end(), value) - values_.begin();
    return 100.0 * static_cast<double>(below) / static_cast<double>(values_.size());
}

long long percentile_threshold(std::span<const long long> senior_t10, int n_percent) {
    return SeniorPopulation(std::vector<long long>(senior_t10.begin(), senior_t10.end()))
        .threshold(n_percent);
}

double t10_percentile_of(long long value, std::span<const long long> senior_t10) {
    return SeniorPopulation(std::vector<long long>(senior_t10.begin(), senior_t10.end()))
        .percentile_of(value);
}

ProgramMeasures program_measures(std::span<const FacultyRecord> program_faculty,
                                 const SeniorPopulation& senior_population,
                                 std::span<const int> Ns) {
    ProgramMeasures out;
    if (!program_faculty.empty()) out.university_id = program_faculty.front().university_id;

    std::vector<long long> senior_t10;
    std::vector<long long> all_t10;
    for (const auto& f : program_faculty) {
        if (!f.t10) continue;
        all_t10.push_back(*f.t10);
        if (is_senior(f.rank)) senior_t10.push_back(*f.t10);
    }
    if (senior_t10.empty()) throw MeasuresUndefined(out.university_id);

    out.size = static_cast<int>(all_t10.size());

    std::sort(senior_t10.begin(), senior_t10.end());
    std::size_t n = senior_t10.size();
    out.m10 = (n % 2 == 1)
                  ? static_cast<double>(senior_t10[n / 2])
                  : (static_cast<double>(senior_t10[n / 2 - 1]) +
                     static_cast<double>(senior_t10[n / 2])) / 2.0;

    double log_sum = 0.0;
    double pct_sum = 0.0;
    for (long long v : senior_t10) {
        log_sum += std::log1p(static_cast<double>(v));
        pct_sum += senior_population.percentile_of(v);
    }
    out.g10 = std::exp(log_sum / static_cast<double>(n));
    out.p10 = pct_sum / static_cast<double>(n);

    for (int N : Ns) {
        long long threshold = senior_population.threshold(N);
        out.c[N] = static_cast<int>(
            std::count_if(all_t10.begin(), all_t10.end(),
                          [threshold](long long v) { return v >= threshold; }));
    }
    return out;
}

namespace {

// Faculty grouped per program, preserving the dataset's program order.
std::vector<std::vector<FacultyRecord>> group_by_program(const Dataset& data) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(data.programs.size());
    std::vector<std::vector<FacultyRecord>> groups(data.programs.size());
    for (std::size_t i = 0; i < data.programs.size(); ++i)
        index.emplace(data.programs[i].university_id, i);
    for (const auto& f : data.faculty) groups[index.at(f.university_id)].push_back(f);
    return groups;
}

MeasuresReport all_measures_impl(const Dataset& data, std::span<const int> Ns, bool parallel) {
    SeniorPopulation pool(senior_t10_values(data.faculty));
    // Validate percentiles up front so no exception can cross the parallel loop.
    for (int N : Ns) (void)pool.threshold(N);
    auto groups = group_by_program(data);

    // One slot per program; MeasuresUndefined leaves the slot empty so the
    // loop body stays independent and the output order is deterministic.
    std::vector<std::optional<ProgramMeasures>> slots(groups.size());
    auto body = [&](std::size_t i) {
        if (groups[i].empty()) return;
        try {
            slots[i] = program_measures(groups[i], pool, Ns);
            slots[i]->university_id = data.programs[i].university_id;
        } catch (const MeasuresUndefined&) {
            // collected below
        }
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(groups.size()); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < groups.size(); ++i) body(i);
    }

    MeasuresReport report;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i])
            report.measures.push_back(std::move(*slots[i]));
        else
            report.undefined.push_back(data.programs[i].university_id);
    }
    return report;
}

} // namespace

MeasuresReport compute_all_measures(const Dataset& data, std::span<const int> Ns) {
    return all_measures_impl(data, Ns, true);
}

MeasuresReport compute_all_measures_serial(const Dataset& data, std::span<const int> Ns) {
    return all_measures_impl(data, Ns, false);
}

std::string measures_csv(const MeasuresReport& report, std::span<const int> Ns) {
    std::string out = "university,size,m10,g10,p10";
    for (int N : Ns) out += ",c" + std::to_string(N);
    out += '\n';
    for (const auto& m : report.measures) {
        std::vector<std::string> row = {m.university_id, std::to_string(m.size),
                                        csv::format_fixed(m.m10, 1),
                                        csv::format_fixed(m.g10, 3),
                                        csv::format_fixed(m.p10, 3)};
        for (int N : Ns) row.push_back(std::to_string(m.c.at(N)));
        out += csv::join_row(row);
    }
    return out;
}

} // namespace citerank
