#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad index, bad parameter, wrong shape).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A graph or construction would exceed the 64-vertex word width.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An exact-arithmetic intermediate left the 128-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its cap; `partial_count` is how many items were seen before stopping.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, std::size_t partial_count)
        : Error(what), partial_count_(partial_count) {}

    std::size_t partial_count() const noexcept { return partial_count_; }

private:
    std::size_t partial_count_;
};

/// Malformed interchange text (graph6, code files, reports).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace rankforge
