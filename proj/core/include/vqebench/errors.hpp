#pragma once

#include <stdexcept>
#include <string>

namespace vqebench {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration value or unsupported option.
struct ConfigError : Error {
    using Error::Error;
};

/// Dimension mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

/// Wire or element index out of range.
struct IndexError : Error {
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

/// Non-convergence or non-finite intermediate value.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace vqebench
