#include <cmath>
#include <random>

#include "doctest.h"

#include "citerank/errors.hpp"
#include "citerank/stats.hpp"

using namespace citerank;

TEST_CASE("transforms apply elementwise and reject negatives") {
    std::vector<double> v = {0.0, 1.0, 4.0};
    CHECK(transform(v, TransformKind::Sqrt) == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(transform(std::vector<double>{0.0}, TransformKind::Log1p) ==
          std::vector<double>{0.0});
    CHECK(transform(std::vector<double>{100.0}, TransformKind::Sqrt) ==
          std::vector<double>{10.0});
    CHECK(transform(v, TransformKind::Identity) == v);
    CHECK_THROWS_AS(transform(std::vector<double>{-1.0}, TransformKind::Sqrt), StatsError);
    CHECK_THROWS_AS(transform(std::vector<double>{-1.0}, TransformKind::Log1p), StatsError);
}

TEST_CASE("monotone transforms preserve value ordering") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> value(0.0, 500.0);
    std::vector<double> v(40);
    for (auto& x : v) x = value(rng);
    for (auto kind : {TransformKind::Sqrt, TransformKind::Log1p}) {
        auto t = transform(v, kind);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                CHECK((v[i] < v[j]) == (t[i] < t[j]));
    }
}

TEST_CASE("pearson hits the exact-linearity poles") {
    CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{2, 4, 6}) ==
          doctest::Approx(1.0));
    CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}) ==
          doctest::Approx(-1.0));
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 2}, std::vector<double>{1}), StatsError);
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 1}, std::vector<double>{1, 2}), StatsError);
}

TEST_CASE("pearson is invariant under positive affine maps and flips sign") {
    std::mt19937 rng(5);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<double> x(25), y(25);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = noise(rng);
        y[i] = 0.6 * x[i] + noise(rng);
    }
    double base = pearson(x, y);
    std::vector<double> scaled(x.size()), negated(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        scaled[i] = 3.5 * x[i] + 11.0;
        negated[i] = -2.0 * x[i] + 1.0;
    }
    CHECK(pearson(scaled, y) == doctest::Approx(base).epsilon(1e-12));
    CHECK(pearson(negated, y) == doctest::Approx(-base).epsilon(1e-12));
}

TEST_CASE("r_squared brackets its defining cases") {
    std::vector<double> obs = {1.0, 2.0, 3.0, 4.0};
    CHECK(r_squared(obs, obs) == doctest::Approx(1.0));
    std::vector<double> mean_pred(obs.size(), 2.5);
    CHECK(r_squared(mean_pred, obs) == doctest::Approx(0.0));
    std::vector<double> bad = {10.0, -10.0, 10.0, -10.0};
    CHECK(r_squared(bad, obs) < 0.0);
    CHECK_THROWS_AS(r_squared(obs, std::vector<double>{5, 5, 5, 5}), StatsError);
}

TEST_CASE("fixed-intercept fit recovers exact coefficients") {
    FeatureVector f1{{1, 2, 3}, "x"};
    std::vector<double> y = {1 + 2.0 * 1, 1 + 2.0 * 2, 1 + 2.0 * 3};
    auto beta = fit_fixed_intercept(std::vector<FeatureVector>{f1}, y, 1.0);
    REQUIRE(beta.size() == 1);
    CHECK(beta[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("two-feature fit recovers a planted model to 1e-10") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> value(0.0, 20.0);
    for (int trial = 0; trial < 20; ++trial) {
        FeatureVector a{{}, "a"}, b{{}, "b"};
        std::vector<double> y;
        double b1 = value(rng) / 10.0, b2 = value(rng) / 10.0;
        for (int i = 0; i < 12; ++i) {
            a.values.push_back(value(rng));
            b.values.push_back(value(rng));
            y.push_back(1.0 + b1 * a.values.back() + b2 * b.values.back());
        }
        auto beta = fit_fixed_intercept(std::vector<FeatureVector>{a, b}, y, 1.0);
        CHECK(beta[0] == doctest::Approx(b1).epsilon(1e-10));
        CHECK(beta[1] == doctest::Approx(b2).epsilon(1e-10));
    }
}

TEST_CASE("fit residuals are orthogonal to every feature") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> value(0.0, 10.0);
    std::normal_distribution<double> noise(0.0, 0.3);
    FeatureVector a{{}, "a"}, b{{}, "b"}, c{{}, "c"};
    std::vector<double> y;
    for (int i = 0; i < 30; ++i) {
        a.values.push_back(value(rng));
        b.values.push_back(value(rng));
        c.values.push_back(value(rng));
        y.push_back(1.0 + 0.4 * a.values.back() + 0.2 * b.values.back() +
                    0.1 * c.values.back() + noise(rng));
    }
    std::vector<FeatureVector> features = {a, b, c};
    auto beta = fit_fixed_intercept(features, y, 1.0);
    for (const auto& f : features) {
        double dot = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            double resid = y[i] - 1.0 - beta[0] * a.values[i] - beta[1] * b.values[i] -
                           beta[2] * c.values[i];
            dot += resid * f.values[i];
        }
        CHECK(std::abs(dot) < 1e-8 * static_cast<double>(y.size()));
    }
}

TEST_CASE("fit agrees with a grid-search oracle on small instances") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> value(0.0, 5.0);
    std::uniform_real_distribution<double> coef(0.05, 0.45);
    std::normal_distribution<double> noise(0.0, 0.05);
    const double step = 1e-3;
    for (int trial = 0; trial < 3; ++trial) {
        FeatureVector a{{}, "a"}, b{{}, "b"};
        std::vector<double> y;
        double b1 = coef(rng), b2 = coef(rng);
        for (int i = 0; i < 10; ++i) {
            a.values.push_back(value(rng));
            b.values.push_back(value(rng));
            y.push_back(1.0 + b1 * a.values.back() + b2 * b.values.back() + noise(rng));
        }
        auto beta = fit_fixed_intercept(std::vector<FeatureVector>{a, b}, y, 1.0);

        // Exhaustive lattice search around the admissible coefficient range.
        double best1 = 0, best2 = 0, best_sse = 1e300;
        for (double g1 = -0.1; g1 <= 0.6; g1 += step) {
            for (double g2 = -0.1; g2 <= 0.6; g2 += step) {
                double sse = 0.0;
                for (std::size_t i = 0; i < y.size(); ++i) {
                    double r = y[i] - 1.0 - g1 * a.values[i] - g2 * b.values[i];
                    sse += r * r;
                }
                if (sse < best_sse) {
                    best_sse = sse;
                    best1 = g1;
                    best2 = g2;
                }
            }
        }
        CHECK(std::abs(beta[0] - best1) <= step + 1e-9);
        CHECK(std::abs(beta[1] - best2) <= step + 1e-9);
    }
}

TEST_CASE("fit rejects collinear features and bad shapes") {
    FeatureVector a{{1, 2, 3, 4}, "a"};
    FeatureVector twice{{2, 4, 6, 8}, "2a"};
    std::vector<double> y = {1, 2, 3, 4};
    CHECK_THROWS_AS(fit_fixed_intercept(std::vector<FeatureVector>{a, twice}, y, 1.0),
                    StatsError);
    FeatureVector short_one{{1, 2}, "short"};
    CHECK_THROWS_AS(fit_fixed_intercept(std::vector<FeatureVector>{short_one}, y, 1.0),
                    StatsError);
    CHECK_THROWS_AS(fit_fixed_intercept({}, y, 1.0), StatsError);
    std::vector<double> tiny = {1.0};
    FeatureVector one{{2.0}, "one"};
    CHECK_THROWS_AS(fit_fixed_intercept(std::vector<FeatureVector>{one}, tiny, 1.0),
                    StatsError);
}
