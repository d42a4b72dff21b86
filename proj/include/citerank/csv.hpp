#pragma once

// Minimal CSV reader/writer. Handles double-quoted fields with embedded
// commas, quotes, and newlines; accepts LF and CRLF input, always emits LF.

#include <string>
#include <string_view>
#include <vector>

namespace citerank::csv {

struct Document {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // 1-based file line each data row started on (header is line 1).
    std::vector<std::size_t> row_lines;
};

Document parse(std::string_view text);

// Quotes the field if it contains a comma, quote, or newline.
std::string escape(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

// Fixed-point formatting, e.g. format_fixed(0.36, 3) == "0.360".
// Values that round to zero are printed without a sign.
std::string format_fixed(double value, int decimals);

} // namespace citerank::csv
