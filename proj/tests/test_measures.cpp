#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "citerank/dataset.hpp"
#include "citerank/errors.hpp"
#include "citerank/measures.hpp"

using namespace citerank;

namespace {

FacultyRecord senior(const std::string& univ, const std::string& name, long long t10) {
    FacultyRecord f;
    f.university_id = univ;
    f.name = name;
    f.rank = Rank::Full;
    f.t10 = t10;
    f.has_profile = true;
    return f;
}

FacultyRecord assistant(const std::string& univ, const std::string& name, long long t10) {
    FacultyRecord f = senior(univ, name, t10);
    f.rank = Rank::Assistant;
    return f;
}

const std::vector<int> kNs = {20, 40, 60, 80};

} // namespace

TEST_CASE("compute_t10 takes the 10th largest citation count") {
    std::vector<long long> v = {100, 90, 80, 70, 60, 50, 40, 30, 20, 10, 5};
    CHECK(compute_t10(v) == 10);
    CHECK(compute_t10(std::vector<long long>{500, 400, 300}) == 0);
    CHECK(compute_t10(std::vector<long long>(20, 7)) == 7);
}

TEST_CASE("compute_t10 equals the sort-descending oracle on random lists") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> len(0, 50), cites(0, 2000);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> v(len(rng));
        for (auto& x : v) x = cites(rng);
        std::vector<long long> sorted = v;
        std::sort(sorted.rbegin(), sorted.rend());
        long long expected = sorted.size() < 10 ? 0 : sorted[9];
        CHECK(compute_t10(v) == expected);
    }
}

TEST_CASE("compute_h_index matches brute force") {
    CHECK(compute_h_index(std::vector<long long>{10, 8, 5, 4, 3}) == 4);
    CHECK(compute_h_index(std::vector<long long>{}) == 0);
    CHECK(compute_h_index(std::vector<long long>{1, 1, 1, 1}) == 1);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 40), cites(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> v(len(rng));
        for (auto& x : v) x = cites(rng);
        long long best = 0;
        for (long long h = 0; h <= static_cast<long long>(v.size()); ++h) {
            long long at_least = std::count_if(v.begin(), v.end(),
                                               [h](long long c) { return c >= h; });
            if (at_least >= h) best = h;
        }
        CHECK(compute_h_index(v) == best);
    }
}

TEST_CASE("percentile threshold uses the nearest rank") {
    std::vector<long long> ladder = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    CHECK(percentile_threshold(ladder, 50) == 50);
    CHECK(percentile_threshold(std::vector<long long>{7}, 10) == 7);
    CHECK(percentile_threshold(std::vector<long long>{7}, 95) == 7);
    CHECK_THROWS_AS(percentile_threshold({}, 50), StatsError);
    CHECK_THROWS_AS(percentile_threshold(ladder, 0), StatsError);
    CHECK_THROWS_AS(percentile_threshold(ladder, 100), StatsError);
}

TEST_CASE("thresholds are non-decreasing in N") {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> cites(0, 500);
    std::vector<long long> pop(137);
    for (auto& x : pop) x = cites(rng);
    SeniorPopulation pool{pop};
    for (int n = 2; n < 100; ++n) CHECK(pool.threshold(n - 1) <= pool.threshold(n));
}

TEST_CASE("t10_percentile_of counts the strictly-below fraction") {
    std::vector<long long> ladder = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    CHECK(t10_percentile_of(50, ladder) == doctest::Approx(40.0));
    CHECK(t10_percentile_of(0, ladder) == 0.0);
    CHECK(t10_percentile_of(1000, ladder) == doctest::Approx(100.0));
}

TEST_CASE("percentile round-trip lands within 100/n for duplicate-free values") {
    std::mt19937 rng(7);
    std::vector<long long> pop(80);
    for (std::size_t i = 0; i < pop.size(); ++i)
        pop[i] = static_cast<long long>(i * 13 + (i % 3)); // strictly increasing
    SeniorPopulation pool{pop};
    double slack = 100.0 / static_cast<double>(pop.size());
    for (int N = 1; N < 100; ++N) {
        double back = pool.percentile_of(pool.threshold(N));
        CHECK(back <= N);
        CHECK(back >= N - slack);
    }
}

TEST_CASE("program_measures matches closed forms on two seniors") {
    std::vector<FacultyRecord> faculty = {senior("u", "a", 3), senior("u", "b", 8)};
    SeniorPopulation pool{{3, 8}};
    auto m = program_measures(faculty, pool, kNs);
    CHECK(m.m10 == doctest::Approx(5.5));
    CHECK(m.g10 == doctest::Approx(6.0)); // sqrt(4 * 9)
    CHECK(m.size == 2);
}

TEST_CASE("program_measures reproduces the worked mid-size program") {
    // Median senior t10 100 with 9 faculty at or above the 60th-percentile
    // bar of 123: m10 = 100 and c[60] = 9.
    std::vector<FacultyRecord> faculty;
    for (int i = 0; i < 9; ++i)
        faculty.push_back(senior("u", "high" + std::to_string(i), 123 + i));
    faculty.push_back(senior("u", "median", 100));
    for (int i = 0; i < 9; ++i)
        faculty.push_back(senior("u", "low" + std::to_string(i), 10 + i));

    // 100-value population whose nearest-rank 60th percentile (index 59) is 123.
    std::vector<long long> values;
    for (int i = 1; i <= 59; ++i) values.push_back(i);
    for (int i = 0; i < 41; ++i) values.push_back(123 + i);
    SeniorPopulation pool{values};
    REQUIRE(pool.threshold(60) == 123);

    auto m = program_measures(faculty, pool, kNs);
    CHECK(m.m10 == doctest::Approx(100.0));
    CHECK(m.c.at(60) == 9);
}

TEST_CASE("program_measures floors at all-zero seniors") {
    std::vector<FacultyRecord> faculty = {senior("u", "a", 0), senior("u", "b", 0)};
    SeniorPopulation pool{{0, 0, 5, 9}};
    auto m = program_measures(faculty, pool, kNs);
    CHECK(m.m10 == 0.0);
    CHECK(m.g10 == doctest::Approx(1.0));
    CHECK(m.p10 == 0.0);
    // Threshold at low N is 0, so zero-valued faculty still clear it.
    CHECK(m.c.at(20) == 2);
}

TEST_CASE("program_measures excludes assistants from averages but not counts") {
    std::vector<FacultyRecord> faculty = {senior("u", "a", 10), senior("u", "b", 20),
                                          assistant("u", "kid", 1000)};
    SeniorPopulation pool{{10, 20}};
    auto m = program_measures(faculty, pool, kNs);
    CHECK(m.m10 == doctest::Approx(15.0)); // assistant's 1000 not in the median
    CHECK(m.size == 3);
    CHECK(m.c.at(80) == 1 + 1); // bar is 20: the assistant and senior b clear it
}

TEST_CASE("program_measures requires a senior with t10") {
    std::vector<FacultyRecord> faculty = {assistant("u", "kid", 50)};
    SeniorPopulation pool{{10, 20}};
    CHECK_THROWS_AS(program_measures(faculty, pool, kNs), MeasuresUndefined);
    try {
        program_measures(faculty, pool, kNs);
    } catch (const MeasuresUndefined& e) {
        CHECK(e.university_id() == "u");
    }
}

TEST_CASE("program_measures is permutation-invariant") {
    std::vector<FacultyRecord> faculty;
    for (int i = 0; i < 12; ++i)
        faculty.push_back(senior("u", "s" + std::to_string(i), (i * 37) % 200));
    SeniorPopulation pool{senior_t10_values(faculty)};
    auto base = program_measures(faculty, pool, kNs);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(faculty.begin(), faculty.end(), rng);
        auto again = program_measures(faculty, pool, kNs);
        CHECK(again.m10 == base.m10);
        CHECK(again.g10 == base.g10);
        CHECK(again.p10 == base.p10);
        CHECK(again.c == base.c);
    }
}

TEST_CASE("raising one faculty's t10 never lowers measures under a fixed pool") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> cites(0, 300), bump(1, 150);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FacultyRecord> faculty;
        for (int i = 0; i < 8; ++i)
            faculty.push_back(senior("u", "s" + std::to_string(i), cites(rng)));
        faculty.push_back(assistant("u", "kid", cites(rng)));
        SeniorPopulation pool{{5, 25, 50, 100, 150, 200, 250}};

        auto before = program_measures(faculty, pool, kNs);
        auto& lucky = faculty[static_cast<std::size_t>(trial) % faculty.size()];
        lucky.t10 = *lucky.t10 + bump(rng);
        auto after = program_measures(faculty, pool, kNs);

        CHECK(after.m10 >= before.m10);
        CHECK(after.g10 >= before.g10);
        CHECK(after.p10 >= before.p10);
        for (int N : kNs) CHECK(after.c.at(N) >= before.c.at(N));
    }
}

TEST_CASE("cN is non-increasing in N") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> cites(0, 400);
    std::vector<FacultyRecord> faculty;
    for (int i = 0; i < 30; ++i)
        faculty.push_back(senior("u", "s" + std::to_string(i), cites(rng)));
    SeniorPopulation pool{senior_t10_values(faculty)};
    std::vector<int> all_Ns;
    for (int n = 1; n < 100; ++n) all_Ns.push_back(n);
    auto m = program_measures(faculty, pool, all_Ns);
    for (int n = 2; n < 100; ++n) CHECK(m.c.at(n - 1) >= m.c.at(n));
}

TEST_CASE("compute_all_measures pools thresholds across the dataset") {
    std::vector<FacultyRecord> faculty = {senior("u1", "a", 89)};
    auto data = make_dataset(implied_programs(faculty), faculty);
    auto report = compute_all_measures(data, kNs);
    REQUIRE(report.measures.size() == 1);
    CHECK(report.measures[0].m10 == doctest::Approx(89.0));
    CHECK(report.measures[0].g10 == doctest::Approx(90.0));
    CHECK(report.measures[0].p10 == 0.0);
    CHECK(report.undefined.empty());
}

TEST_CASE("compute_all_measures reports undefined programs and keeps order") {
    std::vector<FacultyRecord> faculty = {senior("u1", "a", 10), assistant("u2", "b", 99),
                                          senior("u3", "c", 20)};
    auto data = make_dataset(implied_programs(faculty), faculty);
    auto report = compute_all_measures(data, kNs);
    REQUIRE(report.measures.size() == 2);
    CHECK(report.measures[0].university_id == "u1");
    CHECK(report.measures[1].university_id == "u3");
    REQUIRE(report.undefined.size() == 1);
    CHECK(report.undefined[0] == "u2");
}

TEST_CASE("parallel and serial measure pipelines agree exactly") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> cites(0, 600), program(0, 39);
    std::vector<FacultyRecord> faculty;
    for (int i = 0; i < 2000; ++i) {
        auto f = (i % 5 == 0) ? assistant("p" + std::to_string(program(rng)),
                                          "f" + std::to_string(i), cites(rng))
                              : senior("p" + std::to_string(program(rng)),
                                       "f" + std::to_string(i), cites(rng));
        if (i % 11 == 0) {
            f.t10.reset();
            f.has_profile = false;
        }
        faculty.push_back(std::move(f));
    }
    auto data = make_dataset(implied_programs(faculty), faculty);
    auto parallel = compute_all_measures(data, kNs);
    auto serial = compute_all_measures_serial(data, kNs);
    CHECK(measures_csv(parallel, kNs) == measures_csv(serial, kNs));
}

TEST_CASE("measures csv carries 3-decimal g10 and p10") {
    std::vector<FacultyRecord> faculty = {senior("u1", "a", 3), senior("u1", "b", 8)};
    auto data = make_dataset(implied_programs(faculty), faculty);
    auto report = compute_all_measures(data, kNs);
    auto text = measures_csv(report, kNs);
    CHECK(text.find("university,size,m10,g10,p10,c20,c40,c60,c80\n") == 0);
    CHECK(text.find("u1,2,5.5,6.000,25.000") != std::string::npos);
}
