#ifndef OPA_ERRORS_HPP
#define OPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opa {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input / violated precondition (CLI exit code 2).
struct InvalidArgument : Error {
    using Error::Error;
};

// Index past the end of a custom weight table.
struct OutOfRange : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// full_kernel called with |z w̄| >= 1.
struct DivergentKernel : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Power-series division of 1/f with f(0) = 0.
struct ZeroAtOrigin : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// interior_distance called with a zero on or outside the unit circle.
struct NotInterior : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// inverse_entry_bounds called with a zero off the unit circle.
struct NotUnimodular : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Parameter outside the domain of a closed-form formula (e.g. alpha > 1).
struct OutOfDomain : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// A compact sampler produced no points.
struct EmptyCompact : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Requested scalar backend cannot represent the inputs exactly
// (e.g. rational backend with non-integer power weight).
struct BackendUnsupported : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Numerical failures (CLI exit code 3).
struct NumericalError : Error {
    using Error::Error;
};

struct SingularMatrix : NumericalError {
    explicit SingularMatrix(const std::string& what, double cond = 0.0)
        : NumericalError(what), condition_estimate(cond) {}
    double condition_estimate;
};

struct NotHermitian : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// A quantity that is mathematically real/consistent drifted past tolerance.
struct PrecisionExhausted : NumericalError {
    using NumericalError::NumericalError;
};

// recover_pn verification failed: residual does not belong to 1 - P_n * f.
struct InconsistentResidual : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace opa

#endif
