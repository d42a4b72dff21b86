#include "citerank/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

namespace {

long long parse_int(const std::string& s, std::size_t line, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + s + "'");
    return v;
}

double parse_double(const std::string& s, std::size_t line, const char* what) {
    try {
        std::size_t consumed = 0;
        double v = std::stod(s, &consumed);
        if (consumed != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("invalid ") + what + " '" + s + "'");
    }
}

bool parse_bool(const std::string& s, std::size_t line, const char* what) {
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    throw ParseError(line, std::string("invalid ") + what + " '" + s + "'");
}

void require_header(const csv::Document& doc, const std::vector<std::string>& expected) {
    if (doc.header != expected) {
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) want += ',';
            want += expected[i];
        }
        throw ParseError(1, "expected header '" + want + "'");
    }
}

} // namespace

const char* rank_name(Rank r) {
    switch (r) {
        case Rank::Assistant: return "assistant";
        case Rank::Associate: return "associate";
        case Rank::Full: return "full";
    }
    return "?";
}

Rank rank_from_string(const std::string& s) {
    std::string lower(s.size(), '\0');
    std::transform(s.begin(), s.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "assistant") return Rank::Assistant;
    if (lower == "associate") return Rank::Associate;
    if (lower == "full") return Rank::Full;
    throw std::invalid_argument("unknown rank '" + s + "'");
}

std::vector<FacultyRecord> parse_faculty_csv(std::string_view text) {
    csv::Document doc = csv::parse(text);
    require_header(doc, {"university", "name", "rank", "t10", "has_profile", "h_index"});
    std::vector<FacultyRecord> out;
    out.reserve(doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        const auto& row = doc.rows[i];
        std::size_t line = doc.row_lines[i];
        if (row.size() != 6) throw ParseError(line, "expected 6 fields");
        FacultyRecord rec;
        rec.university_id = row[0];
        rec.name = row[1];
        if (rec.university_id.empty()) throw ParseError(line, "empty university");
        if (rec.name.empty()) throw ParseError(line, "empty name");
        try {
            rec.rank = rank_from_string(row[2]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
        if (!row[3].empty()) {
            long long t10 = parse_int(row[3], line, "t10");
            if (t10 < 0) throw ParseError(line, "negative t10");
            rec.t10 = t10;
        }
        rec.has_profile = parse_bool(row[4], line, "has_profile");
        if (!row[5].empty()) {
            long long h = parse_int(row[5], line, "h_index");
            if (h < 0) throw ParseError(line, "negative h_index");
            rec.h_index = h;
        }
        if (rec.t10 && !rec.has_profile)
            throw ParseError(line, "t10 present but has_profile is 0");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<ProgramRecord> parse_programs_csv(std::string_view text) {
    csv::Document doc = csv::parse(text);
    require_header(doc, {"university", "name", "usn_cs_score", "usn_university_score"});
    std::vector<ProgramRecord> out;
    out.reserve(doc.rows.size());
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        const auto& row = doc.rows[i];
        std::size_t line = doc.row_lines[i];
        if (row.size() != 4) throw ParseError(line, "expected 4 fields");
        ProgramRecord rec;
        rec.university_id = row[0];
        rec.name = row[1];
        if (rec.university_id.empty()) throw ParseError(line, "empty university");
        if (!seen.insert(rec.university_id).second)
            throw ParseError(line, "duplicate university '" + rec.university_id + "'");
        if (!row[2].empty()) {
            double score = parse_double(row[2], line, "usn_cs_score");
            if (score < 2.0 || score > 5.0)
                throw ParseError(line, "usn_cs_score out of [2,5]");
            rec.usn_cs_score = score;
        }
        if (!row[3].empty()) {
            double score = parse_double(row[3], line, "usn_university_score");
            if (score < 20.0 || score > 100.0)
                throw ParseError(line, "usn_university_score out of [20,100]");
            rec.usn_university_score = score;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string serialize_faculty_csv(const std::vector<FacultyRecord>& faculty) {
    std::string out = "university,name,rank,t10,has_profile,h_index\n";
    for (const auto& f : faculty) {
        out += csv::join_row({f.university_id, f.name, rank_name(f.rank),
                              f.t10 ? std::to_string(*f.t10) : "",
                              f.has_profile ? "true" : "false",
                              f.h_index ? std::to_string(*f.h_index) : ""});
    }
    return out;
}

std::string serialize_programs_csv(const std::vector<ProgramRecord>& programs) {
    std::string out = "university,name,usn_cs_score,usn_university_score\n";
    for (const auto& p : programs) {
        out += csv::join_row(
            {p.university_id, p.name,
             p.usn_cs_score ? csv::format_fixed(*p.usn_cs_score, 1) : "",
             p.usn_university_score ? csv::format_fixed(*p.usn_university_score, 1) : ""});
    }
    return out;
}

Dataset make_dataset(std::vector<ProgramRecord> programs,
                     std::vector<FacultyRecord> faculty) {
    std::unordered_set<std::string> known;
    for (const auto& p : programs) known.insert(p.university_id);
    for (const auto& f : faculty) {
        if (!known.count(f.university_id))
            throw DatasetError("faculty record for unknown university '" + f.university_id + "'");
    }
    return Dataset{std::move(programs), std::move(faculty)};
}

std::vector<ProgramRecord> implied_programs(const std::vector<FacultyRecord>& faculty) {
    std::vector<ProgramRecord> out;
    std::unordered_set<std::string> seen;
    for (const auto& f : faculty) {
        if (seen.insert(f.university_id).second) {
            ProgramRecord p;
            p.university_id = f.university_id;
            p.name = f.university_id;
            out.push_back(std::move(p));
        }
    }
    return out;
}

ValidationReport validate(const Dataset& data) {
    ValidationReport rep;
    rep.programs = static_cast<int>(data.programs.size());
    rep.faculty_total = static_cast<int>(data.faculty.size());

    std::unordered_map<std::string, ProgramCoverage> cover;
    for (const auto& p : data.programs) {
        ProgramCoverage c;
        c.university_id = p.university_id;
        cover.emplace(p.university_id, std::move(c));
    }
    for (const auto& f : data.faculty) {
        switch (f.rank) {
            case Rank::Assistant: ++rep.assistants; break;
            case Rank::Associate: ++rep.associates; break;
            case Rank::Full: ++rep.full_professors; break;
        }
        if (f.has_profile) ++rep.with_profile;
        if (f.t10) ++rep.with_t10;
        auto& c = cover.at(f.university_id);
        ++c.faculty_total;
        if (is_senior(f.rank)) {
            ++rep.seniors;
            ++c.senior_total;
            if (f.t10) {
                ++rep.seniors_with_t10;
                ++c.senior_with_t10;
            }
        }
    }
    if (rep.faculty_total > 0) {
        rep.profile_coverage = static_cast<double>(rep.with_profile) / rep.faculty_total;
        rep.t10_coverage = static_cast<double>(rep.with_t10) / rep.faculty_total;
    }
    if (rep.seniors > 0)
        rep.senior_t10_coverage = static_cast<double>(rep.seniors_with_t10) / rep.seniors;

    for (const auto& p : data.programs) {
        auto c = cover.at(p.university_id);
        c.measures_defined = c.senior_with_t10 > 0;
        if (!c.measures_defined)
            rep.warnings.push_back("program '" + p.university_id +
                                   "' has no senior faculty with t10; measures undefined");
        rep.per_program.push_back(std::move(c));
    }
    return rep;
}

std::vector<long long> senior_t10_values(const std::vector<FacultyRecord>& faculty) {
    std::vector<long long> out;
    for (const auto& f : faculty) {
        if (is_senior(f.rank) && f.t10) out.push_back(*f.t10);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Table7Row> parse_table7_csv(std::string_view text) {
    csv::Document doc = csv::parse(text);
    require_header(doc, {"rank", "university", "size", "m10", "g10", "c40", "c60", "usn", "scholar"});
    std::vector<Table7Row> out;
    out.reserve(doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        const auto& row = doc.rows[i];
        std::size_t line = doc.row_lines[i];
        if (row.size() != 9) throw ParseError(line, "expected 9 fields");
        Table7Row r;
        r.rank = static_cast<int>(parse_int(row[0], line, "rank"));
        r.university = row[1];
        r.size = static_cast<int>(parse_int(row[2], line, "size"));
        r.m10 = parse_int(row[3], line, "m10");
        r.g10 = parse_int(row[4], line, "g10");
        r.c40 = parse_int(row[5], line, "c40");
        r.c60 = parse_int(row[6], line, "c60");
        r.usn = parse_double(row[7], line, "usn");
        r.scholar = parse_double(row[8], line, "scholar");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Table7Row> load_table7_fixture() {
    return parse_table7_csv(table7_fixture_csv());
}

} // namespace citerank
