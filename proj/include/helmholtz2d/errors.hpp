#pragma once

#include <stdexcept>
#include <string>

namespace helmholtz2d {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument hits a pole of the gamma function or a forbidden lower parameter.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented support range of an operation.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Structural precondition violated (termination index, truncation order, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Chart conversion requested at the coordinate origin.
class OriginError : public Error {
public:
    using Error::Error;
};

/// Coefficient evaluated at one of its integrable endpoint singularities.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Quadrature rule could not reach its error target.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Projection radius places the evaluation too close to a Bessel zero.
class NodeError : public Error {
public:
    using Error::Error;
};

/// Truncated series or integral did not settle within its budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed or invalid run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace helmholtz2d
