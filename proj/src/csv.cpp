#include "citerank/csv.hpp"

#include <cmath>
#include <cstdio>

#include "citerank/errors.hpp"

namespace citerank::csv {

namespace {

// Consumes one record starting at `pos`; appends fields, advances pos past
// the record's trailing newline. Tracks line numbers across quoted newlines.
std::vector<std::string> read_record(std::string_view text, std::size_t& pos, std::size_t& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    const std::size_t start_line = line;
    while (pos < text.size()) {
        char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            ++pos;
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            ++pos;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            ++pos;
        } else if (c == '\n' || (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n')) {
            pos += (c == '\r') ? 2 : 1;
            ++line;
            fields.push_back(std::move(field));
            return fields;
        } else {
            field += c;
            ++pos;
        }
    }
    if (quoted) throw ParseError(start_line, "unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

} // namespace

Document parse(std::string_view text) {
    Document doc;
    std::size_t pos = 0;
    std::size_t line = 1;
    if (text.empty()) return doc;
    doc.header = read_record(text, pos, line);
    while (pos < text.size()) {
        std::size_t row_line = line;
        auto fields = read_record(text, pos, line);
        if (fields.size() == 1 && fields[0].empty()) continue; // blank line
        doc.rows.push_back(std::move(fields));
        doc.row_lines.push_back(row_line);
    }
    return doc;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape(fields[i]);
    }
    out += '\n';
    return out;
}

std::string format_fixed(double value, int decimals) {
    double unit = std::pow(10.0, -decimals);
    if (std::abs(value) < unit / 2) value = 0.0; // avoid "-0.000"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

} // namespace citerank::csv
