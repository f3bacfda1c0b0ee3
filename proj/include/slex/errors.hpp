#pragma once

#include <stdexcept>
#include <string>

namespace slex {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input value lies outside the mathematical domain of the operation
/// (negative radius, negative coupling, malformed orders, ...).
struct domain_error : error {
    using error::error;
};

/// The request is well-formed but exceeds what the implementation supports
/// (jet order beyond the model limit, nodal quantum numbers, ...).
struct capability_error : error {
    using error::error;
};

/// A numerical procedure failed to converge or to locate its target
/// (root bracketing, eigenvalue search, ...).
struct solver_error : error {
    using error::error;
};

/// A linear system or rational approximant is singular or too ill-conditioned
/// to trust.
struct degeneracy_error : error {
    using error::error;
};

}  // namespace slex
