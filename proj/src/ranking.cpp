#include "citerank/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"
#include "citerank/stats.hpp"

namespace citerank {

std::vector<RankingEntry> rank_programs(std::span<const ScoredProgram> scores) {
    std::vector<const ScoredProgram*> sorted;
    sorted.reserve(scores.size());
    for (const auto& s : scores) sorted.push_back(&s);
    // Compare display scores in tenths to keep 4.4 vs 4.400000001 from
    // splitting a tie; alphabetical within a tie for stable output.
    auto tenths = [](double score) { return std::llround(score * 10.0); };
    std::sort(sorted.begin(), sorted.end(),
              [&](const ScoredProgram* a, const ScoredProgram* b) {
                  auto ta = tenths(a->display_score), tb = tenths(b->display_score);
                  if (ta != tb) return ta > tb;
                  return a->university_id < b->university_id;
              });

    std::vector<RankingEntry> out;
    out.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        RankingEntry e;
        e.rank = (i > 0 && tenths(sorted[i]->display_score) ==
                               tenths(sorted[i - 1]->display_score))
                     ? out.back().rank
                     : static_cast<int>(i) + 1;
        e.university_id = sorted[i]->university_id;
        e.display_score = sorted[i]->display_score;
        e.raw_score = sorted[i]->raw_score;
        e.usn_score = sorted[i]->usn_score;
        if (e.usn_score) e.delta = e.display_score - *e.usn_score;
        out.push_back(std::move(e));
    }
    return out;
}

std::string rankings_csv(std::span<const RankingEntry> entries) {
    std::string out = "rank,university,scholar,usn,delta\n";
    for (const auto& e : entries) {
        out += csv::join_row({std::to_string(e.rank), e.university_id,
                              csv::format_fixed(e.display_score, 1),
                              e.usn_score ? csv::format_fixed(*e.usn_score, 1) : "",
                              e.delta ? csv::format_fixed(*e.delta, 1) : ""});
    }
    return out;
}

namespace {

GroupStats group_stats(const std::vector<double>& scores, const std::vector<double>& usn) {
    GroupStats stats;
    stats.count = scores.size();
    if (scores.size() < 3) {
        stats.note = "insufficient";
        return stats;
    }
    try {
        stats.pearson = pearson(scores, usn);
    } catch (const StatsError&) {
        stats.note = "insufficient"; // zero variance
    }
    return stats;
}

} // namespace

GroupReport group_correlations(std::span<const ProgramScore> programs,
                               double split, double min_usn) {
    if (split <= min_usn) throw StatsError("split must exceed min_usn");
    std::vector<double> hi_s, hi_u, lo_s, lo_u;
    for (const auto& p : programs) {
        if (!p.usn || *p.usn < min_usn) continue;
        if (*p.usn >= split) {
            hi_s.push_back(p.score);
            hi_u.push_back(*p.usn);
        } else {
            lo_s.push_back(p.score);
            lo_u.push_back(*p.usn);
        }
    }
    return {group_stats(hi_s, hi_u), group_stats(lo_s, lo_u)};
}

std::vector<Discrepancy> discrepancy_report(std::span<const ProgramScore> programs,
                                            double default_usn) {
    std::vector<Discrepancy> out;
    out.reserve(programs.size());
    for (const auto& p : programs) {
        Discrepancy d;
        d.university_id = p.university_id;
        d.scholar = p.score;
        d.usn = p.usn.value_or(default_usn);
        d.delta = d.scholar - d.usn;
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const Discrepancy& a, const Discrepancy& b) {
        if (std::abs(a.delta) != std::abs(b.delta))
            return std::abs(a.delta) > std::abs(b.delta);
        return a.university_id < b.university_id;
    });
    return out;
}

BiasTable bias_table(std::span<const FacultyRecord> seniors) {
    std::vector<long long> sorted;
    for (const auto& f : seniors)
        if (f.t10) sorted.push_back(*f.t10);
    std::sort(sorted.begin(), sorted.end());

    BiasTable table;
    for (const auto& f : seniors) {
        if (!f.t10) continue;
        // Leave-one-out percentile: this faculty against all the others (own
        // value never counts as strictly below itself, so the count over the
        // full population already equals the count over the others).
        auto below = std::lower_bound(sorted.begin(), sorted.end(), *f.t10) -
                     sorted.begin();
        std::size_t others = sorted.size() - 1;
        double pct = others == 0 ? 0.0
                                 : 100.0 * static_cast<double>(below) /
                                       static_cast<double>(others);
        int decile = std::min(9, static_cast<int>(pct / 10.0));
        auto& [with_profile, without_profile] = table.deciles[decile];
        (f.has_profile ? with_profile : without_profile) += 1;
    }
    return table;
}

std::string scatter_csv(std::span<const ProgramScore> programs, double default_usn) {
    std::vector<const ProgramScore*> sorted;
    sorted.reserve(programs.size());
    for (const auto& p : programs) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const ProgramScore* a, const ProgramScore* b) {
                  return a->university_id < b->university_id;
              });
    std::string out = "university,score,usn\n";
    for (const ProgramScore* p : sorted) {
        out += csv::join_row({p->university_id, csv::format_fixed(p->score, 3),
                              csv::format_fixed(p->usn.value_or(default_usn), 1)});
    }
    return out;
}

} // namespace citerank
