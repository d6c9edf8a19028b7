#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkroots {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold (unit not in graph, graph not a tree, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Malformed text input. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A configured size, leaf or time budget would be exceeded.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// An invariant that the mathematics guarantees was violated.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace linkroots
