#pragma once

#include <stdexcept>
#include <string>

namespace zariski {

/// Raised when an operation is applied outside its mathematical domain
/// (valuation of zero, empty family, non-representation, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A subset mentions an element that is not part of its carrier.
class InvalidSubset : public DomainError {
public:
    using DomainError::DomainError;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zariski
