#pragma once

#include <stdexcept>
#include <string>

namespace fraclat {

// Input outside an operation's domain (bad exponent, bad lattice size, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A Gamma-type pole was hit exactly (nonpositive integer argument).
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Kernel requested on top of a singular abscissa (x = 0 or a lattice image point).
struct SingularityError : DomainError {
    using DomainError::DomainError;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature ran out of depth before reaching the requested tolerance.
struct QuadratureNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-route or residual check exceeded its stated tolerance.
struct ToleranceNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Work or memory guard tripped (site cap, dimension cap).
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fraclat
