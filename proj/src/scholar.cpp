#include "citerank/scholar.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "json.hpp"

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

const char* averaged_feature_name(AveragedFeature f) {
    switch (f) {
        case AveragedFeature::SqrtM10: return "sqrt_m10";
        case AveragedFeature::SqrtG10: return "sqrt_g10";
        case AveragedFeature::P10: return "p10";
    }
    return "?";
}

const char* cumulative_feature_name(CumulativeFeature f) {
    switch (f) {
        case CumulativeFeature::SqrtC40: return "sqrt_c40";
        case CumulativeFeature::SqrtC60: return "sqrt_c60";
        case CumulativeFeature::SqrtC80: return "sqrt_c80";
    }
    return "?";
}

std::string model_spec_name(const ModelSpec& spec) {
    std::string name = std::string(averaged_feature_name(spec.averaged)) + "+" +
                       cumulative_feature_name(spec.cumulative);
    if (spec.use_reputation) name += "+us";
    return name;
}

double predict(const FittedModel& model, double a, double c, std::optional<double> us) {
    if (model.spec.use_reputation != us.has_value())
        throw ModelError(us ? "model '" + model_spec_name(model.spec) +
                                  "' takes no university score"
                            : "model '" + model_spec_name(model.spec) +
                                  "' requires a university score");
    double s = model.intercept + model.beta1 * a + model.beta2 * c;
    if (us) s += *model.beta3 * *us;
    return s;
}

// ============================================================================
// Training rows
// ============================================================================

FeatureRow feature_row(const ProgramMeasures& m) {
    FeatureRow row;
    row.university_id = m.university_id;
    row.m10 = m.m10;
    row.g10 = m.g10;
    row.p10 = m.p10;
    for (const auto& [N, count] : m.c) row.c[N] = static_cast<double>(count);
    return row;
}

FeatureRow feature_row(const Table7Row& r) {
    FeatureRow row;
    row.university_id = r.university;
    row.m10 = static_cast<double>(r.m10);
    row.g10 = static_cast<double>(r.g10);
    row.c[40] = static_cast<double>(r.c40);
    row.c[60] = static_cast<double>(r.c60);
    if (r.usn > 0.0) row.usn = r.usn; // 0.0 marks "not ranked"
    return row;
}

std::vector<FeatureRow> feature_rows(std::span<const ProgramMeasures> measures,
                                     std::span<const ProgramRecord> programs) {
    std::unordered_map<std::string, const ProgramRecord*> by_id;
    for (const auto& p : programs) by_id.emplace(p.university_id, &p);
    std::vector<FeatureRow> rows;
    rows.reserve(measures.size());
    for (const auto& m : measures) {
        FeatureRow row = feature_row(m);
        if (auto it = by_id.find(m.university_id); it != by_id.end()) {
            row.usn = it->second->usn_cs_score;
            row.university_score = it->second->usn_university_score;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FeatureRow> feature_rows(std::span<const Table7Row> rows) {
    std::vector<FeatureRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(feature_row(r));
    return out;
}

std::optional<double> averaged_value(const FeatureRow& row, AveragedFeature f) {
    switch (f) {
        case AveragedFeature::SqrtM10:
            if (!row.m10) return std::nullopt;
            return std::sqrt(*row.m10);
        case AveragedFeature::SqrtG10:
            if (!row.g10) return std::nullopt;
            return std::sqrt(*row.g10);
        case AveragedFeature::P10:
            return row.p10;
    }
    return std::nullopt;
}

std::optional<double> cumulative_value(const FeatureRow& row, CumulativeFeature f) {
    int N = 0;
    switch (f) {
        case CumulativeFeature::SqrtC40: N = 40; break;
        case CumulativeFeature::SqrtC60: N = 60; break;
        case CumulativeFeature::SqrtC80: N = 80; break;
    }
    auto it = row.c.find(N);
    if (it == row.c.end()) return std::nullopt;
    return std::sqrt(it->second);
}

// ============================================================================
// Grid training
// ============================================================================

namespace {

std::vector<const FeatureRow*> training_subset(std::span<const FeatureRow> rows,
                                               double min_usn) {
    std::vector<const FeatureRow*> subset;
    for (const auto& r : rows)
        if (r.usn && *r.usn >= min_usn) subset.push_back(&r);
    return subset;
}

// Fits one 2-predictor cell; nullopt when either feature is missing somewhere.
std::optional<FittedModel> fit_cell(const ModelSpec& spec,
                                    std::span<const FeatureRow* const> subset) {
    FeatureVector a{{}, averaged_feature_name(spec.averaged)};
    FeatureVector c{{}, cumulative_feature_name(spec.cumulative)};
    std::vector<double> y;
    for (const FeatureRow* row : subset) {
        auto av = averaged_value(*row, spec.averaged);
        auto cv = cumulative_value(*row, spec.cumulative);
        if (!av || !cv) return std::nullopt;
        a.values.push_back(*av);
        c.values.push_back(*cv);
        y.push_back(*row->usn);
    }
    std::vector<FeatureVector> features = {std::move(a), std::move(c)};
    auto beta = fit_fixed_intercept(features, y, 1.0);

    FittedModel model;
    model.spec = spec;
    model.beta1 = beta[0];
    model.beta2 = beta[1];
    std::vector<double> pred(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        pred[i] = predict(model, features[0].values[i], features[1].values[i]);
    model.diagnostics = {r_squared(pred, y), pearson(pred, y), y.size()};
    return model;
}

} // namespace

TrainedGrid train_grid(std::span<const FeatureRow> rows, double min_usn) {
    auto subset = training_subset(rows, min_usn);
    if (subset.size() < 10)
        throw ModelError("training needs at least 10 rows with usn >= " +
                         csv::format_fixed(min_usn, 1) + ", found " +
                         std::to_string(subset.size()));

    TrainedGrid grid;
    grid.training_rows = subset.size();
    for (AveragedFeature a : {AveragedFeature::SqrtM10, AveragedFeature::SqrtG10,
                              AveragedFeature::P10}) {
        for (CumulativeFeature c : {CumulativeFeature::SqrtC40, CumulativeFeature::SqrtC60,
                                    CumulativeFeature::SqrtC80}) {
            ModelSpec spec{a, c, false};
            if (auto model = fit_cell(spec, subset))
                grid.fitted.emplace(spec, std::move(*model));
            else
                grid.skipped.push_back(spec);
        }
    }
    return grid;
}

std::vector<FittedModel> select_best(const TrainedGrid& grid, std::size_t k) {
    if (grid.fitted.empty()) throw ModelError("no fitted models to select from");
    if (k > grid.fitted.size())
        throw ModelError("cannot select " + std::to_string(k) + " of " +
                         std::to_string(grid.fitted.size()) + " models");
    std::vector<FittedModel> models;
    models.reserve(grid.fitted.size());
    for (const auto& [spec, model] : grid.fitted) models.push_back(model);
    std::stable_sort(models.begin(), models.end(),
                     [](const FittedModel& x, const FittedModel& y) {
                         if (x.diagnostics.r_squared != y.diagnostics.r_squared)
                             return x.diagnostics.r_squared > y.diagnostics.r_squared;
                         if (x.diagnostics.pearson != y.diagnostics.pearson)
                             return x.diagnostics.pearson > y.diagnostics.pearson;
                         return x.spec < y.spec;
                     });
    models.resize(k);
    return models;
}

JointModel average_models(std::span<const FittedModel> models) {
    if (models.empty()) throw ModelError("cannot average zero models");
    JointModel joint;
    for (const char* key : {"sqrt_m10", "sqrt_g10", "sqrt_c40", "sqrt_c60"})
        joint.coefficients[key] = 0.0;
    for (const auto& m : models) {
        if (m.spec.use_reputation)
            throw ModelError("cannot average a reputation model into a joint model");
        if (m.intercept != 1.0) throw ModelError("member intercept is not 1.0");
        std::string a = averaged_feature_name(m.spec.averaged);
        std::string c = cumulative_feature_name(m.spec.cumulative);
        if (!joint.coefficients.count(a) || !joint.coefficients.count(c))
            throw ModelError("model '" + model_spec_name(m.spec) +
                             "' uses a feature outside the joint set");
        joint.coefficients[a] += m.beta1;
        joint.coefficients[c] += m.beta2;
        joint.provenance.push_back(m.spec);
    }
    for (auto& [key, value] : joint.coefficients)
        value /= static_cast<double>(models.size());
    return joint;
}

// ============================================================================
// Scoring
// ============================================================================

double round1(double x) {
    return std::round(x * 10.0) / 10.0;
}

namespace {

double joint_raw_score(const FeatureRow& row, const JointModel& model) {
    struct Term {
        const char* key;
        std::optional<double> value;
    };
    const Term terms[] = {
        {"sqrt_m10", row.m10 ? std::optional(std::sqrt(*row.m10)) : std::nullopt},
        {"sqrt_g10", row.g10 ? std::optional(std::sqrt(*row.g10)) : std::nullopt},
        {"sqrt_c40", row.c.count(40) ? std::optional(std::sqrt(row.c.at(40))) : std::nullopt},
        {"sqrt_c60", row.c.count(60) ? std::optional(std::sqrt(row.c.at(60))) : std::nullopt},
    };
    double s = model.intercept;
    for (const auto& t : terms) {
        auto it = model.coefficients.find(t.key);
        if (it == model.coefficients.end() || it->second == 0.0) continue;
        if (!t.value)
            throw ModelError("program '" + row.university_id + "' lacks " + t.key);
        s += it->second * *t.value;
    }
    return s;
}

} // namespace

ScoreResult scholar_score(const FeatureRow& row, const JointModel& model) {
    ScoreResult res;
    res.university_id = row.university_id;
    res.raw_score = joint_raw_score(row, model);
    res.display_score = std::clamp(round1(res.raw_score), 1.0, 5.0);
    return res;
}

ScoreResult scholar_score(const ProgramMeasures& m, const JointModel& model) {
    return scholar_score(feature_row(m), model);
}

std::vector<ScoreResult> score_all(std::span<const FeatureRow> rows,
                                   const JointModel& model) {
    std::vector<ScoreResult> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(scholar_score(row, model));
    return out;
}

FitDiagnostics evaluate_joint(const JointModel& model,
                              std::span<const FeatureRow> rows,
                              double min_usn) {
    std::vector<double> pred, obs;
    for (const auto& row : rows) {
        if (!row.usn || *row.usn < min_usn) continue;
        pred.push_back(joint_raw_score(row, model));
        obs.push_back(*row.usn);
    }
    if (pred.size() < 2) throw ModelError("too few rows to evaluate");
    return {r_squared(pred, obs), pearson(pred, obs), pred.size()};
}

// ============================================================================
// Reputation-augmented models
// ============================================================================

ReputationResult train_reputation_grid(std::span<const FeatureRow> rows,
                                       double min_usn,
                                       double default_university_score) {
    auto subset = training_subset(rows, min_usn);
    if (subset.size() < 10)
        throw ModelError("training needs at least 10 rows with usn >= " +
                         csv::format_fixed(min_usn, 1) + ", found " +
                         std::to_string(subset.size()));

    std::vector<double> us(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
        us[i] = subset[i]->university_score.value_or(default_university_score);
    if (std::all_of(us.begin(), us.end(), [&](double v) { return v == us[0]; }))
        throw ModelError("university scores are constant; reputation term is "
                         "collinear with the intercept");

    ReputationResult result;
    result.training_rows = subset.size();

    // Output-averaged predictions across the 2x2 grid, per training row.
    std::vector<double> avg_pred(subset.size(), 0.0);
    std::vector<double> y(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) y[i] = *subset[i]->usn;

    for (AveragedFeature a : {AveragedFeature::SqrtM10, AveragedFeature::SqrtG10}) {
        for (CumulativeFeature c : {CumulativeFeature::SqrtC40, CumulativeFeature::SqrtC60}) {
            ModelSpec spec{a, c, true};
            FeatureVector fa{{}, averaged_feature_name(a)};
            FeatureVector fc{{}, cumulative_feature_name(c)};
            FeatureVector fu{{}, "us"};
            for (std::size_t i = 0; i < subset.size(); ++i) {
                auto av = averaged_value(*subset[i], a);
                auto cv = cumulative_value(*subset[i], c);
                if (!av || !cv)
                    throw ModelError("training row '" + subset[i]->university_id +
                                     "' lacks a feature for " + model_spec_name(spec));
                fa.values.push_back(*av);
                fc.values.push_back(*cv);
                fu.values.push_back(us[i]);
            }
            std::vector<FeatureVector> features = {fa, fc, fu};
            auto beta = fit_fixed_intercept(features, y, 1.0);

            FittedModel model;
            model.spec = spec;
            model.beta1 = beta[0];
            model.beta2 = beta[1];
            model.beta3 = beta[2];
            std::vector<double> pred(y.size());
            for (std::size_t i = 0; i < y.size(); ++i)
                pred[i] = predict(model, fa.values[i], fc.values[i], fu.values[i]);
            model.diagnostics = {r_squared(pred, y), pearson(pred, y), y.size()};
            for (std::size_t i = 0; i < y.size(); ++i) avg_pred[i] += pred[i] / 4.0;
            result.fitted.emplace(spec, std::move(model));
        }
    }
    result.average_diagnostics = {r_squared(avg_pred, y), pearson(avg_pred, y), y.size()};
    return result;
}

// ============================================================================
// Model persistence
// ============================================================================

std::string model_to_json(const SavedModel& model) {
    nlohmann::ordered_json j;
    j["intercept"] = model.joint.intercept;
    nlohmann::ordered_json coefs;
    for (const auto& [key, value] : model.joint.coefficients) coefs[key] = value;
    j["coefficients"] = coefs;
    nlohmann::ordered_json trained;
    trained["min_usn"] = model.min_usn;
    trained["n"] = model.n;
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const auto& spec : model.joint.provenance) members.push_back(model_spec_name(spec));
    trained["members"] = members;
    j["trained_on"] = trained;
    nlohmann::ordered_json diag;
    diag["r_squared"] = model.diagnostics.r_squared;
    diag["pearson"] = model.diagnostics.pearson;
    diag["n"] = model.diagnostics.n;
    j["diagnostics"] = diag;
    return j.dump(2) + "\n";
}

SavedModel model_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        SavedModel model;
        model.joint.intercept = j.at("intercept").get<double>();
        for (const auto& [key, value] : j.at("coefficients").items())
            model.joint.coefficients[key] = value.get<double>();
        if (j.contains("trained_on")) {
            const auto& t = j["trained_on"];
            model.min_usn = t.value("min_usn", 0.0);
            model.n = t.value("n", std::size_t{0});
        }
        if (j.contains("diagnostics")) {
            const auto& d = j["diagnostics"];
            model.diagnostics.r_squared = d.value("r_squared", 0.0);
            model.diagnostics.pearson = d.value("pearson", 0.0);
            model.diagnostics.n = d.value("n", std::size_t{0});
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("model file has unexpected shape: ") + e.what());
    }
}

} // namespace citerank
