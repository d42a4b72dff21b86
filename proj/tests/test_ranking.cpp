#include <algorithm>
#include <random>

#include "doctest.h"

#include "citerank/dataset.hpp"
#include "citerank/errors.hpp"
#include "citerank/ranking.hpp"

using namespace citerank;

namespace {

ScoredProgram scored(const std::string& univ, double display) {
    return {univ, display, display, std::nullopt};
}

} // namespace

TEST_CASE("competition ranking shares the minimal rank across ties") {
    std::vector<ScoredProgram> scores = {scored("e", 4.4), scored("a", 5.0),
                                         scored("c", 5.0), scored("b", 5.0),
                                         scored("d", 5.0)};
    auto entries = rank_programs(scores);
    REQUIRE(entries.size() == 5);
    for (int i = 0; i < 4; ++i) CHECK(entries[i].rank == 1);
    CHECK(entries[4].rank == 5);
    // Ties come out alphabetically.
    CHECK(entries[0].university_id == "a");
    CHECK(entries[3].university_id == "d");
    CHECK(entries[4].university_id == "e");
}

TEST_CASE("distinct scores rank 1..n") {
    std::vector<ScoredProgram> scores;
    for (int i = 0; i < 12; ++i)
        scores.push_back(scored("u" + std::to_string(i), 5.0 - 0.1 * i));
    auto entries = rank_programs(scores);
    for (int i = 0; i < 12; ++i) CHECK(entries[i].rank == i + 1);
}

TEST_CASE("rank equals one plus the number of strictly better scores") {
    std::mt19937 rng(15);
    std::uniform_int_distribution<int> tenth(10, 50);
    std::vector<ScoredProgram> scores;
    for (int i = 0; i < 60; ++i)
        scores.push_back(scored("u" + std::to_string(i), tenth(rng) / 10.0));
    auto entries = rank_programs(scores);
    for (const auto& e : entries) {
        auto better = std::count_if(entries.begin(), entries.end(),
                                    [&](const RankingEntry& other) {
                                        return other.display_score > e.display_score + 1e-9;
                                    });
        CHECK(e.rank == better + 1);
    }
    // Permutation invariance.
    std::shuffle(scores.begin(), scores.end(), rng);
    auto again = rank_programs(scores);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(again[i].rank == entries[i].rank);
        CHECK(again[i].university_id == entries[i].university_id);
    }
}

TEST_CASE("published scholar column reproduces the published rank column") {
    auto rows = load_table7_fixture();
    std::vector<ScoredProgram> scores;
    for (const auto& r : rows) scores.push_back(scored(r.university, r.scholar));
    auto entries = rank_programs(scores);
    REQUIRE(entries.size() == rows.size());
    for (const auto& e : entries) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const Table7Row& r) {
            return r.university == e.university_id;
        });
        REQUIRE(it != rows.end());
        CHECK(it->rank == e.rank);
    }
}

TEST_CASE("rankings csv carries usn and delta only when ranked") {
    std::vector<ScoredProgram> scores = {{"alpha", 4.4, 4.41, 4.5},
                                         {"beta", 2.7, 2.68, std::nullopt}};
    auto text = rankings_csv(rank_programs(scores));
    CHECK(text.find("rank,university,scholar,usn,delta\n") == 0);
    CHECK(text.find("1,alpha,4.4,4.5,-0.1\n") != std::string::npos);
    CHECK(text.find("2,beta,2.7,,\n") != std::string::npos);
}

TEST_CASE("group correlations split at the boundary and count exactly") {
    std::vector<ProgramScore> programs;
    // High group: strongly correlated; low group: weakly.
    for (int i = 0; i < 10; ++i)
        programs.push_back({"h" + std::to_string(i), 3.0 + 0.2 * i, 3.0 + 0.2 * i});
    for (int i = 0; i < 8; ++i)
        programs.push_back({"l" + std::to_string(i), 2.0 + 0.05 * (i % 3), 2.0 + 0.07 * i});
    programs.push_back({"unranked", 2.2, std::nullopt});
    auto report = group_correlations(programs, 2.7, 2.0);
    CHECK(report.high.count == 10);
    CHECK(report.low.count == 8);
    REQUIRE(report.high.pearson.has_value());
    CHECK(*report.high.pearson == doctest::Approx(1.0));
    CHECK(report.low.pearson.has_value());
    CHECK_THROWS_AS(group_correlations(programs, 2.0, 2.0), StatsError);
}

TEST_CASE("degenerate groups are marked insufficient") {
    // Both usn values sit below the split: the high group is empty and the low
    // group has too few members for a correlation.
    std::vector<ProgramScore> programs = {{"a", 3.0, 3.0}, {"b", 3.1, 3.1}};
    auto report = group_correlations(programs, 3.5, 2.0);
    CHECK(report.high.count == 0);
    CHECK(report.high.note == "insufficient");
    CHECK_FALSE(report.high.pearson.has_value());
    CHECK(report.low.count == 2);
    CHECK(report.low.note == "insufficient");
    // Constant scores: enough members but zero variance.
    std::vector<ProgramScore> flat = {{"a", 3.0, 4.0}, {"b", 3.0, 4.1},
                                      {"c", 3.0, 4.2}, {"d", 3.0, 4.3}};
    auto flat_report = group_correlations(flat, 2.5, 2.0);
    CHECK(flat_report.high.count == 4);
    CHECK(flat_report.high.note == "insufficient");
}

TEST_CASE("discrepancies sort by absolute delta and substitute the default") {
    // Deltas of exactly +-0.5 (exact in binary) exercise the name tie-break.
    std::vector<ProgramScore> programs = {{"colorado", 3.0, 2.5},
                                          {"austin", 3.75, 4.25},
                                          {"match", 3.25, 3.25},
                                          {"unranked", 2.75, std::nullopt}};
    auto report = discrepancy_report(programs, 1.5);
    REQUIRE(report.size() == 4);
    CHECK(report[0].university_id == "unranked"); // 2.75 - 1.5 = +1.25
    CHECK(report[0].delta == doctest::Approx(1.25));
    // |0.5| tie lists austin before colorado (alphabetical).
    CHECK(report[1].university_id == "austin");
    CHECK(report[1].delta == doctest::Approx(-0.5));
    CHECK(report[2].university_id == "colorado");
    CHECK(report[2].delta == doctest::Approx(0.5));
    CHECK(report[3].delta == doctest::Approx(0.0));
}

TEST_CASE("discrepancy deltas are antisymmetric under column swap") {
    std::vector<ProgramScore> programs = {{"a", 3.0, 2.4}, {"b", 2.0, 4.0}};
    std::vector<ProgramScore> swapped = {{"a", 2.4, 3.0}, {"b", 4.0, 2.0}};
    auto fwd = discrepancy_report(programs, 1.5);
    auto rev = discrepancy_report(swapped, 1.5);
    REQUIRE(fwd.size() == rev.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) {
        CHECK(fwd[i].university_id == rev[i].university_id);
        CHECK(fwd[i].delta == doctest::Approx(-rev[i].delta));
    }
}

TEST_CASE("bias table assigns extremes to the outer deciles") {
    std::vector<FacultyRecord> seniors(2);
    seniors[0].university_id = seniors[1].university_id = "u";
    seniors[0].name = "low";
    seniors[0].rank = Rank::Full;
    seniors[0].t10 = 0;
    seniors[0].has_profile = false;
    seniors[1].name = "high";
    seniors[1].rank = Rank::Full;
    seniors[1].t10 = 1000;
    seniors[1].has_profile = true;
    auto table = bias_table(seniors);
    CHECK(table.deciles[0] == std::pair<int, int>{0, 1});
    CHECK(table.deciles[9] == std::pair<int, int>{1, 0});
    for (int d = 1; d < 9; ++d) {
        CHECK(table.deciles[d].first == 0);
        CHECK(table.deciles[d].second == 0);
    }
}

TEST_CASE("bias table counts sum to the population and balance for unique t10") {
    std::mt19937 rng(6);
    std::vector<FacultyRecord> seniors;
    for (int i = 0; i < 100; ++i) {
        FacultyRecord f;
        f.university_id = "u";
        f.name = "s" + std::to_string(i);
        f.rank = Rank::Associate;
        f.t10 = i * 7 + 1; // duplicate-free
        f.has_profile = (i % 3 != 0);
        seniors.push_back(std::move(f));
    }
    auto table = bias_table(seniors);
    int total = 0;
    for (const auto& [with_profile, without_profile] : table.deciles) {
        int size = with_profile + without_profile;
        total += size;
        CHECK(std::abs(size - 10) <= 1);
    }
    CHECK(total == 100);
}

TEST_CASE("all-profiled populations leave the without column empty") {
    std::vector<FacultyRecord> seniors;
    for (int i = 0; i < 20; ++i) {
        FacultyRecord f;
        f.university_id = "u";
        f.name = "s" + std::to_string(i);
        f.rank = Rank::Full;
        f.t10 = i;
        f.has_profile = true;
        seniors.push_back(std::move(f));
    }
    auto table = bias_table(seniors);
    for (const auto& [with_profile, without_profile] : table.deciles)
        CHECK(without_profile == 0);
}

TEST_CASE("scatter csv is sorted, complete, and substitutes the default") {
    std::vector<ProgramScore> programs = {{"zeta", 2.345678, std::nullopt},
                                          {"alpha", 4.0, 4.5}};
    auto text = scatter_csv(programs, 1.5);
    CHECK(text == "university,score,usn\nalpha,4.000,4.5\nzeta,2.346,1.5\n");
    CHECK(scatter_csv({}, 1.5) == "university,score,usn\n");
}
