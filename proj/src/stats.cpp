#include "citerank/stats.hpp"

#include <cmath>

#include "citerank/errors.hpp"

namespace citerank {

const char* transform_name(TransformKind k) {
    switch (k) {
        case TransformKind::Identity: return "original";
        case TransformKind::Log1p: return "log";
        case TransformKind::Sqrt: return "sqrt";
    }
    return "?";
}

std::vector<double> transform(std::span<const double> values, TransformKind kind) {
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) {
        switch (kind) {
            case TransformKind::Identity:
                out.push_back(v);
                break;
            case TransformKind::Log1p:
                if (v < 0) throw StatsError("log transform requires non-negative input");
                out.push_back(std::log1p(v));
                break;
            case TransformKind::Sqrt:
                if (v < 0) throw StatsError("sqrt transform requires non-negative input");
                out.push_back(std::sqrt(v));
                break;
        }
    }
    return out;
}

namespace {

double mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

} // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw StatsError("pearson: length mismatch");
    if (x.size() < 2) throw StatsError("pearson: need at least 2 samples");
    double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw StatsError("pearson: constant vector");
    return sxy / std::sqrt(sxx * syy);
}

double r_squared(std::span<const double> predicted, std::span<const double> observed) {
    if (predicted.size() != observed.size()) throw StatsError("r_squared: length mismatch");
    if (observed.size() < 2) throw StatsError("r_squared: need at least 2 samples");
    double mo = mean(observed);
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double r = observed[i] - predicted[i];
        double d = observed[i] - mo;
        ss_res += r * r;
        ss_tot += d * d;
    }
    if (ss_tot == 0.0) throw StatsError("r_squared: observed vector is constant");
    return 1.0 - ss_res / ss_tot;
}

std::vector<double> fit_fixed_intercept(std::span<const FeatureVector> features,
                                        std::span<const double> y,
                                        double intercept) {
    const std::size_t k = features.size();
    const std::size_t n = y.size();
    if (k == 0 || k > 3) throw StatsError("fit: need 1 to 3 features");
    for (const auto& f : features) {
        if (f.values.size() != n)
            throw StatsError("fit: feature '" + f.label + "' length mismatch");
    }
    if (n <= k) throw StatsError("fit: need more samples than features");

    // Normal equations X'X b = X'(y - intercept).
    double A[3][3] = {};
    double b[3] = {};
    for (std::size_t i = 0; i < n; ++i) {
        double shifted = y[i] - intercept;
        for (std::size_t r = 0; r < k; ++r) {
            double xr = features[r].values[i];
            b[r] += xr * shifted;
            for (std::size_t c = r; c < k; ++c) A[r][c] += xr * features[c].values[i];
        }
    }
    for (std::size_t r = 1; r < k; ++r)
        for (std::size_t c = 0; c < r; ++c) A[r][c] = A[c][r];

    // Gaussian elimination with partial pivoting on the k x k system.
    std::size_t perm[3] = {0, 1, 2};
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(A[perm[r]][col]) > std::abs(A[perm[pivot]][col])) pivot = r;
        std::swap(perm[col], perm[pivot]);
        double p = A[perm[col]][col];
        if (std::abs(p) < 1e-12) throw StatsError("fit: features are collinear");
        for (std::size_t r = col + 1; r < k; ++r) {
            double factor = A[perm[r]][col] / p;
            for (std::size_t c = col; c < k; ++c) A[perm[r]][c] -= factor * A[perm[col]][c];
            b[perm[r]] -= factor * b[perm[col]];
        }
    }
    std::vector<double> beta(k, 0.0);
    for (std::size_t col = k; col-- > 0;) {
        double s = b[perm[col]];
        for (std::size_t c = col + 1; c < k; ++c) s -= A[perm[col]][c] * beta[c];
        beta[col] = s / A[perm[col]][col];
    }
    return beta;
}

} // namespace citerank
