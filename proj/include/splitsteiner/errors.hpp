#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitsteiner {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The graph handed to an operation violates a structural requirement
/// (self-loop, out-of-range id, parallel edge, disconnected input, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

/// Malformed SSTP / X3C text. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called outside its documented domain, e.g. solve_2split
/// on a reduced instance whose independent-degree is not 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would examine more subsets than it was allowed to.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace splitsteiner
