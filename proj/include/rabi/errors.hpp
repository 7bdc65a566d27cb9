#pragma once

#include <stdexcept>
#include <string>

namespace rabi {

// Invalid numeric input (negative photon number, non-finite argument, bad density matrix).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or schema-violating run configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested problem size exceeds a configured ceiling.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Operation needs Omega_1N != 0 but the row is degenerate.
class DegenerateRowError : public DomainError {
public:
    using DomainError::DomainError;
};

// Dense eigensolver did not converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rabi
