#pragma once

#include <stdexcept>
#include <string>

namespace nullcs {

/// Bad argument to a library call: mismatched lengths or moduli, an index out
/// of range, a parameter outside the range a construction is defined for.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A generalized Boolean function is not in the shape an operation expects.
class UnsupportedShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or pairwise search would exceed its configured budget.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quantity is undefined for the given input (e.g. PAPR of an all-NULL sequence).
class UndefinedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace nullcs
