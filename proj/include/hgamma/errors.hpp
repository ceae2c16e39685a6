#pragma once

#include <stdexcept>
#include <string>

namespace hgamma {

class DivisionByZeroError : public std::domain_error {
public:
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Raised when an exact Gram system turns out singular. The systems solved
// here are positive definite, so this only fires on an internal invariant
// violation.
class SingularSystemError : public std::logic_error {
public:
    explicit SingularSystemError(const std::string& what) : std::logic_error(what) {}
};

// Raised when the closed-form distance series disagrees with the directly
// expanded norm at some order; carries the first mismatch as diagnostics.
class ConventionMismatchError : public std::runtime_error {
public:
    explicit ConventionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

class InsufficientDataError : public std::invalid_argument {
public:
    explicit InsufficientDataError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a basis list does not carry the expected monic polynomial at
// a degree-lex position.
class IndexMappingError : public std::logic_error {
public:
    explicit IndexMappingError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hgamma
