#pragma once

#include <span>
#include <string>
#include <vector>

namespace citerank {

// ============================================================================
// Transforms
// ============================================================================

enum class TransformKind { Identity, Log1p, Sqrt };

const char* transform_name(TransformKind k); // "original" / "log" / "sqrt"

// Elementwise transform; throws StatsError on negative input for Sqrt/Log1p.
// Log uses log(1+x) so zero-valued measures stay defined.
std::vector<double> transform(std::span<const double> values, TransformKind kind);

// ============================================================================
// Correlation and fit quality
// ============================================================================

// Product-moment correlation; throws StatsError on length mismatch, n < 2, or
// a constant vector.
double pearson(std::span<const double> x, std::span<const double> y);

// 1 - SS_res / SS_tot about the observed mean; negative for bad models.
double r_squared(std::span<const double> predicted, std::span<const double> observed);

// ============================================================================
// Fixed-intercept least squares
// ============================================================================

struct FeatureVector {
    std::vector<double> values; // one per program, fixed order
    std::string label;          // e.g. "sqrt_m10"
};

struct FitDiagnostics {
    double r_squared = 0.0;
    double pearson = 0.0;
    std::size_t n = 0;
};

// Minimizes sum over i of (y_i - intercept - sum_j beta_j x_ij)^2 in closed
// form: normal equations on the shifted target (y - intercept), solved by
// Gaussian elimination with partial pivoting (at most 3x3 here). Throws
// StatsError on dimension mismatch, n <= #features, or collinear features
// (pivot below 1e-12).
std::vector<double> fit_fixed_intercept(std::span<const FeatureVector> features,
                                        std::span<const double> y,
                                        double intercept);

} // namespace citerank
