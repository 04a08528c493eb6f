#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdtpc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A ring constructor was called outside its domain (bad modulus, order over the cap, ...).
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Structure constants failed a ring axiom.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was called with an argument violating its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured size bound was exceeded.
class BoundError : public Error {
public:
    using Error::Error;
};

/// Half-open byte range [begin, end) into a source string.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Failure while turning a parsed expression into a ring; carries the span of the offending node.
class ResolveError : public Error {
public:
    ResolveError(const std::string& message, SourceSpan span)
        : Error(message + " (at " + std::to_string(span.begin) + ".." + std::to_string(span.end) + ")"),
          span_(span) {}

    SourceSpan span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

}  // namespace zdtpc
