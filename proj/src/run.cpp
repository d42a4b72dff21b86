#include "citerank/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "citerank/csv.hpp"
#include "citerank/dataset.hpp"
#include "citerank/errors.hpp"
#include "citerank/golden.hpp"
#include "citerank/measures.hpp"
#include "citerank/ranking.hpp"
#include "citerank/scholar.hpp"
#include "citerank/stats.hpp"
#include "citerank/synthgen.hpp"

namespace citerank {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing '" + path + "'");
}

namespace {

namespace fs = std::filesystem;

// Rounds for report.json: general floats at 3 decimals, display scores at 1.
double r3(double v) {
    double r = std::round(v * 1000.0) / 1000.0;
    return r == 0.0 ? 0.0 : r; // never emit -0
}

std::string out_path(const RunConfig& config, const std::string& name) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create directory '" + config.out_dir + "'");
    return (fs::path(config.out_dir) / name).string();
}

// Averaging is defined over the four named features only; grid cells using
// p10 or c80 appear in the grid report but never enter the joint model.
TrainedGrid joint_eligible(const TrainedGrid& grid) {
    TrainedGrid out;
    out.training_rows = grid.training_rows;
    out.skipped = grid.skipped;
    for (const auto& [spec, model] : grid.fitted) {
        bool averaged_ok = spec.averaged == AveragedFeature::SqrtM10 ||
                           spec.averaged == AveragedFeature::SqrtG10;
        bool cumulative_ok = spec.cumulative == CumulativeFeature::SqrtC40 ||
                             spec.cumulative == CumulativeFeature::SqrtC60;
        if (averaged_ok && cumulative_ok) out.fitted.emplace(spec, model);
    }
    return out;
}

std::vector<FittedModel> best_joint_members(const TrainedGrid& grid) {
    auto eligible = joint_eligible(grid);
    return select_best(eligible, std::min<std::size_t>(4, eligible.fitted.size()));
}

Dataset load_dataset(const RunConfig& config) {
    if (config.faculty_path.empty()) throw IoError("no faculty file given (--faculty)");
    auto faculty = parse_faculty_csv(read_file(config.faculty_path));
    std::vector<ProgramRecord> programs =
        config.programs_path.empty()
            ? implied_programs(faculty)
            : parse_programs_csv(read_file(config.programs_path));
    return make_dataset(std::move(programs), std::move(faculty));
}

// ----------------------------------------------------------------------------
// Report bundle: everything `report` and `reproduce` share.
// ----------------------------------------------------------------------------

struct ReportBundle {
    std::string rankings_csv;
    std::string scatter_csv;
    std::string correlations_csv;
    std::string report_json;
    SavedModel ranking_model; // the split-trained model used for the scores
    std::vector<ScoreResult> scores;
};

// Measure columns a row set carries everywhere (the fixture lacks p10/c20/c80).
std::vector<std::pair<std::string, std::vector<double>>> measure_columns(
    std::span<const FeatureRow> rows, const std::vector<int>& Ns) {
    std::vector<std::pair<std::string, std::vector<double>>> cols;
    auto add = [&](const std::string& name, auto getter) {
        std::vector<double> values;
        for (const auto& r : rows) {
            auto v = getter(r);
            if (!v) return; // absent somewhere: column unusable
            values.push_back(*v);
        }
        cols.emplace_back(name, std::move(values));
    };
    add("m10", [](const FeatureRow& r) { return r.m10; });
    add("g10", [](const FeatureRow& r) { return r.g10; });
    add("p10", [](const FeatureRow& r) { return r.p10; });
    for (int N : Ns)
        add("c" + std::to_string(N), [N](const FeatureRow& r) -> std::optional<double> {
            auto it = r.c.find(N);
            if (it == r.c.end()) return std::nullopt;
            return it->second;
        });
    return cols;
}

ReportBundle build_report_bundle(std::span<const FeatureRow> rows,
                                 std::span<const FacultyRecord> faculty,
                                 const RunConfig& config) {
    nlohmann::ordered_json j;

    // --- correlation table (published Original/Log/Sqrt rows) ---------------
    std::vector<double> usn;
    std::vector<std::size_t> ranked; // indices with usn >= min_usn
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].usn && *rows[i].usn >= config.min_usn) {
            ranked.push_back(i);
            usn.push_back(*rows[i].usn);
        }
    }
    j["inputs"] = {{"programs", rows.size()},
                   {"ranked", ranked.size()},
                   {"min_usn", r3(config.min_usn)},
                   {"split", r3(config.split)}};

    auto columns = measure_columns(rows, config.Ns);
    const char* column_order[] = {"m10", "g10", "p10", "c20", "c40", "c60", "c80"};
    nlohmann::ordered_json correlations;
    std::string corr_csv = "transform,m10,g10,p10,c20,c40,c60,c80\n";
    for (TransformKind kind :
         {TransformKind::Identity, TransformKind::Log1p, TransformKind::Sqrt}) {
        nlohmann::ordered_json row_json;
        std::vector<std::string> csv_row = {transform_name(kind)};
        for (const char* name : column_order) {
            auto it = std::find_if(columns.begin(), columns.end(),
                                   [&](const auto& c) { return c.first == name; });
            std::optional<double> r;
            if (it != columns.end()) {
                std::vector<double> subset;
                for (std::size_t i : ranked) subset.push_back(it->second[i]);
                try {
                    r = pearson(transform(subset, kind), usn);
                } catch (const StatsError&) {
                    // degenerate column: leave the cell empty
                }
            }
            if (r) {
                row_json[name] = r3(*r);
                csv_row.push_back(csv::format_fixed(*r, 3));
            } else {
                row_json[name] = nullptr;
                csv_row.push_back("");
            }
        }
        correlations[transform_name(kind)] = row_json;
        corr_csv += csv::join_row(csv_row);
    }
    j["correlations"] = correlations;

    // --- model grid at min_usn ----------------------------------------------
    auto grid = train_grid(rows, config.min_usn);
    nlohmann::ordered_json grid_r2, grid_pearson;
    for (const auto& [spec, model] : grid.fitted) {
        std::string a = averaged_feature_name(spec.averaged);
        std::string c = cumulative_feature_name(spec.cumulative);
        grid_r2[a][c] = r3(model.diagnostics.r_squared);
        grid_pearson[a][c] = r3(model.diagnostics.pearson);
    }
    nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
    for (const auto& spec : grid.skipped) skipped.push_back(model_spec_name(spec));
    j["grid"] = {{"training_rows", grid.training_rows},
                 {"r_squared", grid_r2},
                 {"pearson", grid_pearson},
                 {"skipped", skipped}};

    auto describe_members = [&](const std::vector<FittedModel>& models) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& m : models) {
            arr.push_back({{"model", model_spec_name(m.spec)},
                           {"beta1", r3(m.beta1)},
                           {"beta2", r3(m.beta2)},
                           {"r_squared", r3(m.diagnostics.r_squared)},
                           {"pearson", r3(m.diagnostics.pearson)}});
        }
        return arr;
    };
    auto describe_joint = [&](const JointModel& joint, const FitDiagnostics& diag) {
        nlohmann::ordered_json coefs;
        for (const auto& [key, value] : joint.coefficients) coefs[key] = r3(value);
        return nlohmann::ordered_json{{"coefficients", coefs},
                                      {"pearson", r3(diag.pearson)},
                                      {"r_squared", r3(diag.r_squared)}};
    };

    auto best = best_joint_members(grid);
    auto joint = average_models(best);
    auto joint_diag = evaluate_joint(joint, rows, config.min_usn);
    j["models"]["individual"] = describe_members(best);
    j["models"]["joint"] = describe_joint(joint, joint_diag);

    // --- top-group model (the one that scores and ranks) --------------------
    auto top_grid = train_grid(rows, config.split);
    auto top_best = best_joint_members(top_grid);
    auto top_joint = average_models(top_best);
    auto top_diag = evaluate_joint(top_joint, rows, config.min_usn);
    j["models"]["top_group"] = describe_joint(top_joint, top_diag);
    j["models"]["top_group"]["training_rows"] = top_grid.training_rows;

    // --- reputation grid (needs varying university scores) ------------------
    try {
        auto rep = train_reputation_grid(rows, config.min_usn,
                                         config.default_university_score);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [spec, model] : rep.fitted) {
            arr.push_back({{"model", model_spec_name(spec)},
                           {"beta1", r3(model.beta1)},
                           {"beta2", r3(model.beta2)},
                           {"beta3", r3(*model.beta3)},
                           {"r_squared", r3(model.diagnostics.r_squared)}});
        }
        j["models"]["reputation"] = {
            {"individual", arr},
            {"average_pearson", r3(rep.average_diagnostics.pearson)},
            {"average_r_squared", r3(rep.average_diagnostics.r_squared)}};
    } catch (const ModelError& e) {
        j["models"]["reputation"] = nullptr;
        j["models"]["reputation_note"] = e.what();
    }

    // --- scores, ranking, groups, discrepancies -----------------------------
    ReportBundle bundle;
    bundle.scores = score_all(rows, top_joint);
    bundle.ranking_model = {top_joint, config.split, top_grid.training_rows, top_diag};

    std::vector<ScoredProgram> scored;
    std::vector<ProgramScore> raw_scores, display_scores;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& s = bundle.scores[i];
        scored.push_back({s.university_id, s.display_score, s.raw_score, rows[i].usn});
        raw_scores.push_back({s.university_id, s.raw_score, rows[i].usn});
        display_scores.push_back({s.university_id, s.display_score, rows[i].usn});
    }
    auto entries = rank_programs(scored);
    bundle.rankings_csv = rankings_csv(entries);
    bundle.scatter_csv = scatter_csv(raw_scores, config.default_usn);

    if (config.split > config.min_usn) {
        auto groups = group_correlations(raw_scores, config.split, config.min_usn);
        auto group_json = [&](const GroupStats& g) {
            nlohmann::ordered_json gj;
            gj["count"] = g.count;
            if (g.pearson)
                gj["pearson"] = r3(*g.pearson);
            else
                gj["note"] = g.note.empty() ? "insufficient" : g.note;
            return gj;
        };
        j["groups"] = {{"high", group_json(groups.high)}, {"low", group_json(groups.low)}};
    } else {
        j["groups"] = {{"note", "split does not exceed min_usn; groups skipped"}};
    }

    auto discrepancies = discrepancy_report(display_scores, config.default_usn);
    nlohmann::ordered_json disc = nlohmann::ordered_json::array();
    for (const auto& d : discrepancies) {
        disc.push_back({{"university", d.university_id},
                        {"scholar", r3(d.scholar)},
                        {"usn", r3(d.usn)},
                        {"delta", r3(d.delta)}});
    }
    j["discrepancies"] = disc;

    // --- profile-coverage bias (needs faculty records) ----------------------
    if (!faculty.empty()) {
        std::vector<FacultyRecord> seniors;
        for (const auto& f : faculty)
            if (is_senior(f.rank)) seniors.push_back(f);
        auto bias = bias_table(seniors);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [with_profile, without_profile] : bias.deciles)
            arr.push_back({{"with_profile", with_profile},
                           {"without_profile", without_profile}});
        j["bias"] = arr;
    }

    bundle.correlations_csv = std::move(corr_csv);
    bundle.report_json = j.dump(2) + "\n";
    return bundle;
}

// Feature rows plus warnings for an ingested dataset.
std::vector<FeatureRow> dataset_rows(const Dataset& data, const RunConfig& config,
                                     std::ostream& out) {
    auto report = compute_all_measures(data, config.Ns);
    for (const auto& id : report.undefined)
        out << "warning: skipping '" << id << "': no senior faculty with t10\n";
    if (report.measures.empty()) throw DatasetError("no programs scorable");
    return feature_rows(report.measures, data.programs);
}

} // namespace

// ============================================================================
// Commands
// ============================================================================

int cmd_validate(const RunConfig& config, std::ostream& out) {
    Dataset data = load_dataset(config);
    ValidationReport rep = validate(data);
    out << "programs: " << rep.programs << "\n";
    out << "faculty: " << rep.faculty_total << " (assistant " << rep.assistants
        << ", associate " << rep.associates << ", full " << rep.full_professors
        << ")\n";
    out << "with profile: " << rep.with_profile << " ("
        << csv::format_fixed(100.0 * rep.profile_coverage, 1) << "%)\n";
    out << "with t10: " << rep.with_t10 << " ("
        << csv::format_fixed(100.0 * rep.t10_coverage, 1) << "%)\n";
    out << "senior: " << rep.seniors << ", with t10: " << rep.seniors_with_t10
        << " (" << csv::format_fixed(100.0 * rep.senior_t10_coverage, 1) << "%)\n";
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    return 0;
}

int cmd_measures(const RunConfig& config, std::ostream& out) {
    Dataset data = load_dataset(config);
    auto report = compute_all_measures(data, config.Ns);
    for (const auto& id : report.undefined)
        out << "warning: skipping '" << id << "': no senior faculty with t10\n";
    std::string path = out_path(config, "measures.csv");
    write_file(path, measures_csv(report, config.Ns));
    out << "wrote " << path << " (" << report.measures.size() << " programs)\n";
    return 0;
}

int cmd_fit(const RunConfig& config, std::ostream& out) {
    Dataset data = load_dataset(config);
    auto rows = dataset_rows(data, config, out);
    auto grid = train_grid(rows, config.min_usn);
    auto best = best_joint_members(grid);
    auto joint = average_models(best);
    auto diag = evaluate_joint(joint, rows, config.min_usn);

    SavedModel model{joint, config.min_usn, grid.training_rows, diag};
    std::string path = out_path(config, "model.json");
    write_file(path, model_to_json(model));

    out << "trained on " << grid.training_rows << " programs (usn >= "
        << csv::format_fixed(config.min_usn, 1) << ")\n";
    for (const auto& m : best)
        out << "  " << model_spec_name(m.spec) << ": beta ("
            << csv::format_fixed(m.beta1, 3) << ", " << csv::format_fixed(m.beta2, 3)
            << "), R2 " << csv::format_fixed(m.diagnostics.r_squared, 3) << "\n";
    out << "joint: pearson " << csv::format_fixed(diag.pearson, 3) << ", R2 "
        << csv::format_fixed(diag.r_squared, 3) << "\n";
    out << "wrote " << path << "\n";
    return 0;
}

namespace {

int score_with_model(const RunConfig& config, std::ostream& out,
                     const SavedModel& model) {
    Dataset data = load_dataset(config);
    auto rows = dataset_rows(data, config, out);
    auto scores = score_all(rows, model.joint);

    std::vector<ScoredProgram> scored;
    scored.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        scored.push_back({scores[i].university_id, scores[i].display_score,
                          scores[i].raw_score, rows[i].usn});
    auto entries = rank_programs(scored);
    std::string path = out_path(config, "rankings.csv");
    write_file(path, rankings_csv(entries));
    out << "wrote " << path << " (" << entries.size() << " programs)\n";
    return 0;
}

} // namespace

int cmd_score(const RunConfig& config, std::ostream& out) {
    if (config.model_path.empty()) throw IoError("no model file given (--model)");
    SavedModel model = model_from_json(read_file(config.model_path));
    return score_with_model(config, out, model);
}

int cmd_rank(const RunConfig& config, std::ostream& out) {
    int rc = cmd_fit(config, out);
    if (rc != 0) return rc;
    SavedModel model = model_from_json(read_file(
        (fs::path(config.out_dir) / "model.json").string()));
    return score_with_model(config, out, model);
}

int cmd_report(const RunConfig& config, std::ostream& out) {
    Dataset data = load_dataset(config);
    auto measures = compute_all_measures(data, config.Ns);
    for (const auto& id : measures.undefined)
        out << "warning: skipping '" << id << "': no senior faculty with t10\n";
    if (measures.measures.empty()) throw DatasetError("no programs scorable");
    auto rows = feature_rows(measures.measures, data.programs);

    auto bundle = build_report_bundle(rows, data.faculty, config);
    write_file(out_path(config, "measures.csv"), measures_csv(measures, config.Ns));
    write_file(out_path(config, "correlations.csv"), bundle.correlations_csv);
    write_file(out_path(config, "model.json"), model_to_json(bundle.ranking_model));
    write_file(out_path(config, "rankings.csv"), bundle.rankings_csv);
    write_file(out_path(config, "scatter.csv"), bundle.scatter_csv);
    write_file(out_path(config, "report.json"), bundle.report_json);
    out << "wrote measures.csv, correlations.csv, model.json, rankings.csv, "
           "scatter.csv, report.json to "
        << config.out_dir << "\n";
    return 0;
}

int cmd_reproduce(const RunConfig& config, std::ostream& out) {
    auto rows = feature_rows(load_table7_fixture());
    auto bundle = build_report_bundle(rows, {}, config);
    write_file(out_path(config, "rankings.csv"), bundle.rankings_csv);
    write_file(out_path(config, "scatter.csv"), bundle.scatter_csv);
    write_file(out_path(config, "report.json"), bundle.report_json);

    auto checks = run_golden_checks(config.min_usn, config.split);
    out << format_golden_report(checks);
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass;
    out << passed << "/" << checks.size() << " checks passed; artifacts in "
        << config.out_dir << "\n";
    return all_pass(checks) ? 0 : 1;
}

int cmd_synth(const RunConfig& config, std::ostream& out) {
    SynthConfig synth;
    synth.n = config.n;
    synth.seed = config.seed;
    auto faculty = generate(synth);
    std::string path = out_path(config, "faculty.csv");
    write_file(path, serialize_faculty_csv(faculty));

    std::size_t seniors = 0, profiled = 0;
    for (const auto& f : faculty) {
        seniors += is_senior(f.rank);
        profiled += f.has_profile;
    }
    out << "wrote " << path << " (" << faculty.size() << " faculty, " << seniors
        << " senior, " << profiled << " with profile, seed " << config.seed
        << ")\n";
    return 0;
}

} // namespace citerank
