#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct DegreeCapExceeded : Error {
    using Error::Error;
};

struct NotAComplex : Error {
    using Error::Error;
};

struct NotACocycle : Error {
    using Error::Error;
};

// Raised when the cross-checked deciders disagree; carries the diagnostic dump.
struct InternalDisagreement : Error {
    explicit InternalDisagreement(const std::string& msg, std::string dump_)
        : Error(msg), dump(std::move(dump_)) {}
    std::string dump;
};

struct ParseError : Error {
    ParseError(std::size_t line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    std::size_t line;
};

}  // namespace hext
