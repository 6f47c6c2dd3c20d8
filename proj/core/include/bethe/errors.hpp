#pragma once

#include <stdexcept>
#include <string>

namespace bethe {

/// Argument outside the mathematical domain of an operation (d < 2, r > 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation requested in a number mode it cannot honor, e.g. exact
/// arithmetic at an irrational coupling.
class ModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Refusal to run a computation whose size exceeds a guard.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Invalid run configuration (precision out of range, bad flags, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A checked numerical property failed at the working precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A verification step (factorization, enclosure, classifier) failed.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bethe
