#pragma once

#include <stdexcept>
#include <string>

namespace qmaya {

/// Raised when user-supplied text (shapes, cosets, options) is malformed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant is violated. Signals a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qmaya
