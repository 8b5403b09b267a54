#pragma once

#include <stdexcept>
#include <string>

namespace subsel {

/// Violated precondition: dimension mismatch, empty set, bad index, bad parameter.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input data (files, spec documents). Messages name the offending line when known.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed the configured subset budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace subsel
