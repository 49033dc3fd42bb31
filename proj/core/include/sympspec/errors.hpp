#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympspec {

/// Shape or size mismatch between operands.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An input violates a mathematical precondition (asymmetric, not SPD, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation broke down (non-convergence, pairing failure, overflow, division by zero).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text input could not be parsed; `offset` is the byte position of the failure.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (at offset " + std::to_string(offset_) + ")"),
          offset(offset_) {}
};

/// An operator spec is malformed or violates its declared constraints.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sympspec
