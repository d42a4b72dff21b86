#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citerank/measures.hpp"
#include "citerank/stats.hpp"
#include "citerank/types.hpp"

namespace citerank {

// ============================================================================
// Model specifications
// ============================================================================

// One averaged-measure feature and one cumulative feature per model.
enum class AveragedFeature { SqrtM10, SqrtG10, P10 };
enum class CumulativeFeature { SqrtC40, SqrtC60, SqrtC80 };

const char* averaged_feature_name(AveragedFeature f);     // "sqrt_m10", ...
const char* cumulative_feature_name(CumulativeFeature f); // "sqrt_c40", ...

struct ModelSpec {
    AveragedFeature averaged = AveragedFeature::SqrtM10;
    CumulativeFeature cumulative = CumulativeFeature::SqrtC40;
    bool use_reputation = false;

    // Ordering doubles as the documented tie-break order (m10 < g10 < p10,
    // c40 < c60 < c80).
    auto operator<=>(const ModelSpec&) const = default;
};

std::string model_spec_name(const ModelSpec& spec); // e.g. "sqrt_m10+sqrt_c60"

struct FittedModel {
    ModelSpec spec;
    double beta1 = 0.0;                // averaged-feature coefficient
    double beta2 = 0.0;                // cumulative-feature coefficient
    std::optional<double> beta3;       // reputation coefficient, iff use_reputation
    double intercept = 1.0;
    FitDiagnostics diagnostics;
};

// 1 + beta1*a + beta2*c (+ beta3*us). Inputs are already transformed.
// Throws ModelError when us presence does not match the model's arity.
double predict(const FittedModel& model, double a, double c,
               std::optional<double> us = std::nullopt);

// ============================================================================
// Training rows
// ============================================================================

// One program's regression inputs. Optional fields mark measures a data source
// does not carry (the published fixture lacks p10 and c80, for instance);
// models needing an absent feature are skipped rather than fitted.
struct FeatureRow {
    std::string university_id;
    std::optional<double> m10;
    std::optional<double> g10;
    std::optional<double> p10;
    std::map<int, double> c;                   // N -> cN count
    std::optional<double> usn;                 // peer-assessment score
    std::optional<double> university_score;    // reputation input
};

FeatureRow feature_row(const ProgramMeasures& m);
FeatureRow feature_row(const Table7Row& r);    // usn 0.0 maps to absent

std::vector<FeatureRow> feature_rows(std::span<const ProgramMeasures> measures,
                                     std::span<const ProgramRecord> programs);
std::vector<FeatureRow> feature_rows(std::span<const Table7Row> rows);

// Transformed regressor value for one row, absent when the row lacks the
// underlying measure.
std::optional<double> averaged_value(const FeatureRow& row, AveragedFeature f);
std::optional<double> cumulative_value(const FeatureRow& row, CumulativeFeature f);

// ============================================================================
// Grid training and averaging
// ============================================================================

struct TrainedGrid {
    std::map<ModelSpec, FittedModel> fitted;
    std::vector<ModelSpec> skipped;   // feature unavailable in the data
    std::size_t training_rows = 0;
};

// Fits every (averaged, cumulative) pair on rows with usn >= min_usn.
// Throws ModelError when fewer than 10 rows qualify.
TrainedGrid train_grid(std::span<const FeatureRow> rows, double min_usn);

// Top k models by R-squared; ties broken by Pearson, then by spec order.
std::vector<FittedModel> select_best(const TrainedGrid& grid, std::size_t k);

struct JointModel {
    // Keys among sqrt_m10, sqrt_g10, sqrt_c40, sqrt_c60.
    std::map<std::string, double> coefficients;
    double intercept = 1.0;
    std::vector<ModelSpec> provenance;
};

// Per-feature coefficient average (sum / model count, absent = 0). By
// linearity the joint output equals the mean of the member outputs exactly.
// Throws ModelError on reputation models or p10/c80 features.
JointModel average_models(std::span<const FittedModel> models);

// ============================================================================
// Scoring
// ============================================================================

struct ScoreResult {
    std::string university_id;
    double raw_score = 0.0;       // unclamped model output
    double display_score = 0.0;   // rounded to 1 decimal, clamped to [1, 5]
};

double round1(double x);          // half away from zero, one decimal

ScoreResult scholar_score(const FeatureRow& row, const JointModel& model);
ScoreResult scholar_score(const ProgramMeasures& m, const JointModel& model);

std::vector<ScoreResult> score_all(std::span<const FeatureRow> rows,
                                   const JointModel& model);

// Diagnostics of a joint model against rows with usn >= min_usn.
FitDiagnostics evaluate_joint(const JointModel& model,
                              std::span<const FeatureRow> rows,
                              double min_usn);

// ============================================================================
// Reputation-augmented models
// ============================================================================

struct ReputationResult {
    std::map<ModelSpec, FittedModel> fitted;  // 2x2 grid, use_reputation set
    FitDiagnostics average_diagnostics;       // of the output-averaged model
    std::size_t training_rows = 0;
};

// Four 3-predictor fits ({sqrt_m10, sqrt_g10} x {sqrt_c40, sqrt_c60}, each
// plus the university score) on the usn >= min_usn subset. Rows without a
// university score fall back to default_university_score. Throws ModelError
// when every training row carries the same university score (beta3 would be
// collinear with the intercept).
ReputationResult train_reputation_grid(std::span<const FeatureRow> rows,
                                       double min_usn,
                                       double default_university_score);

// ============================================================================
// Model persistence
// ============================================================================

struct SavedModel {
    JointModel joint;
    double min_usn = 0.0;          // training subset bound
    std::size_t n = 0;             // training rows
    FitDiagnostics diagnostics;    // in-sample, at save time
};

// JSON round-trip. Doubles are serialized shortest-round-trip, so a reloaded
// model reproduces training-time predictions bit for bit.
std::string model_to_json(const SavedModel& model);
SavedModel model_from_json(std::string_view text); // throws ModelError on bad shape

} // namespace citerank
