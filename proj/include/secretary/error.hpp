#pragma once

#include <stdexcept>
#include <string>

namespace secretary {

// Raised when an argument lies outside the domain of an operation
// (n < 1, q outside (0, 1], m outside [0, n-1], mismatched lengths, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a numerical routine fails to reach its requested accuracy.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace secretary
