#pragma once

#include <cmath>
#include <limits>

#include "slex/errors.hpp"
#include "slex/potential.hpp"

namespace slex {

/// Geometry of the expansion: the classical minimum q0 of the effective
/// potential together with the derived frequency and shift parameters.
template <class Real>
struct expansion_context {
    Real alpha = Real(0);
    int l = 0;
    int n_r = 0;      ///< nodal quantum number; only 0 is supported
    Real q0 = Real(0);     ///< expansion point (minimum of the effective potential)
    Real omega = Real(0);  ///< harmonic frequency of the leading oscillator
    Real beta = Real(0);   ///< angular-momentum shift, beta = -(1 + omega)/2
    Real lbar = Real(0);   ///< shifted angular momentum, l - beta
    Real Q = Real(0);      ///< lbar^2, the large parameter of the expansion
};

namespace detail {

/// omega(q) = sqrt((4 + 3 a^2 q^2) / (1 + a^2 q^2)); decreases from 2 to sqrt(3)
template <class Real>
Real omega_at(Real alpha, Real q) {
    const Real u = alpha * alpha * q * q;
    return std::sqrt((Real(4) + Real(3) * u) / (Real(1) + u));
}

/// Root function for q0: g(q) = q^2 (1 + a^2 q^2)^(-1/4) - l - (1 + omega(q))/2.
/// Strictly increasing in q, so the root is unique.
template <class Real>
Real root_function(Real alpha, int l, Real q) {
    const Real u = alpha * alpha * q * q;
    const Real lhs = q * q / std::sqrt(std::sqrt(Real(1) + u));
    return lhs - Real(l) - (Real(1) + omega_at(alpha, q)) / Real(2);
}

}  // namespace detail

/// Solve for the expansion point and fill in the derived parameters.
///
/// The defining equation is q0^2 (1 + a^2 q0^2)^(-1/4) = l + (1 + omega)/2,
/// which is the stationarity condition of the leading energy
/// e(q) = 1/(2 q^2) + V(q)/Q at fixed Q.  For alpha = 0 the solution is the
/// closed form q0 = sqrt(l + 3/2).
template <class Real>
expansion_context<Real> solve_context(Real alpha, int l, int n_r = 0) {
    if (!(alpha >= Real(0))) throw domain_error("solve_context: alpha must be non-negative");
    if (l < 0) throw domain_error("solve_context: l must be non-negative");
    if (n_r != 0) throw capability_error("solve_context: only nodeless states (n_r = 0) are supported");

    expansion_context<Real> ctx;
    ctx.alpha = alpha;
    ctx.l = l;
    ctx.n_r = n_r;

    if (alpha == Real(0)) {
        ctx.q0 = std::sqrt(Real(l) + Real(3) / Real(2));
        ctx.omega = Real(2);
    } else {
        // Bracket the unique root, then bisect to the precision limit of Real.
        Real lo = Real(0);
        Real hi = std::sqrt(Real(l) + Real(3) / Real(2));  // harmonic q0 is an upper bound
        while (detail::root_function(alpha, l, hi) < Real(0)) hi *= Real(2);
        for (int it = 0; it < 200; ++it) {
            const Real mid = (lo + hi) / Real(2);
            if (mid == lo || mid == hi) break;
            if (detail::root_function(alpha, l, mid) < Real(0))
                lo = mid;
            else
                hi = mid;
        }
        ctx.q0 = (lo + hi) / Real(2);
        ctx.omega = detail::omega_at(alpha, ctx.q0);
    }

    ctx.beta = -(Real(1) + ctx.omega) / Real(2);
    ctx.lbar = Real(l) - ctx.beta;
    ctx.Q = ctx.lbar * ctx.lbar;

    // Post-conditions: the defining equation holds to 1e-12, and q0 is a
    // strict local minimum of the leading energy at fixed Q.
    const Real resid = detail::root_function(alpha, l, ctx.q0);
    if (!(std::abs(resid) < Real(1e-12) * std::max(Real(1), ctx.lbar)))
        throw solver_error("solve_context: root residual too large");

    const potential_model<Real> pot(alpha);
    const auto leading = [&](Real q) { return Real(1) / (Real(2) * q * q) + pot(q) / ctx.Q; };
    const Real probe = Real(1e-3);
    const Real e0 = leading(ctx.q0);
    if (!(leading(ctx.q0 - probe) > e0 && leading(ctx.q0 + probe) > e0))
        throw solver_error("solve_context: expansion point is not a local minimum");

    return ctx;
}

}  // namespace slex
