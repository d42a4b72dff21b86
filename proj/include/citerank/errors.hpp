#pragma once

#include <stdexcept>
#include <string>

namespace citerank {

// Raised for malformed input rows; carries the 1-based file line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("row " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Dataset-level invariant violation (unresolved keys, duplicate programs, ...).
class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A program has no senior faculty with a t10 value; names the program.
class MeasuresUndefined : public std::runtime_error {
public:
    explicit MeasuresUndefined(const std::string& university_id)
        : std::runtime_error("measures undefined for program '" + university_id +
                             "': no senior faculty with t10"),
          university_id_(university_id) {}
    const std::string& university_id() const { return university_id_; }

private:
    std::string university_id_;
};

// Numeric-kernel failures: dimension mismatch, zero variance, collinear features.
class StatsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Model misuse: unavailable features, wrong predictor arity, bad model files.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File-system level failures (missing file, unwritable output directory).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace citerank
