#pragma once

#include <stdexcept>
#include <string>

namespace wph {

enum class ErrorKind {
    EmptyInput,
    WellFormedness,
    Range,
    Conjugation,
    Overlap,
    Resource,
    Degree,
    Dimension,
    Mismatch,
    LinearCone,
    Parse,
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::WellFormedness: return "WellFormednessError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Conjugation: return "ConjugationError";
    case ErrorKind::Overlap: return "OverlapError";
    case ErrorKind::Resource: return "ResourceError";
    case ErrorKind::Degree: return "DegreeError";
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::Mismatch: return "MismatchError";
    case ErrorKind::LinearCone: return "LinearConeNotice";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

/// Base exception for every library failure. The kind is what callers
/// (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    const char* name() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

/// Raised by make_weights when some n-element subset of the weights has a
/// common factor. index() is the position (in input order) of the omitted
/// weight.
class WellFormednessError : public Error {
public:
    WellFormednessError(std::size_t index, long long common_factor)
        : Error(ErrorKind::WellFormedness,
                "weights are not well-formed: omitting index " + std::to_string(index) +
                    " leaves common factor " + std::to_string(common_factor)),
          index_(index), factor_(common_factor) {}

    std::size_t index() const noexcept { return index_; }
    long long common_factor() const noexcept { return factor_; }

private:
    std::size_t index_;
    long long factor_;
};

class ResourceError : public Error {
public:
    explicit ResourceError(unsigned long long limit)
        : Error(ErrorKind::Resource,
                "enumeration exceeded the resource cap of " + std::to_string(limit) +
                    " candidate visits"),
          limit_(limit) {}

    unsigned long long limit() const noexcept { return limit_; }

private:
    unsigned long long limit_;
};

/// Raised when regenerated data diverges from a golden record.
class MismatchError : public Error {
public:
    MismatchError(std::size_t row, std::string column, const std::string& detail)
        : Error(ErrorKind::Mismatch, "row " + std::to_string(row) + ", column " + column +
                                         ": " + detail),
          row_(row), column_(std::move(column)) {}

    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

} // namespace wph
