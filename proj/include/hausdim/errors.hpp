#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hausdim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range ratio, bad depth list, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Requested work exceeds a fixed implementation cap (e.g. too many refinement cells).
class CapExceeded : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// The operation is not defined for this input (rotated maps in the OSC checker,
/// overlapping systems in the mass recursion).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A numerical procedure could not produce a meaningful result.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace hausdim
