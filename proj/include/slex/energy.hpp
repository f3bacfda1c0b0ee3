#pragma once

#include <cmath>
#include <vector>

#include "slex/context.hpp"
#include "slex/errors.hpp"
#include "slex/potential.hpp"
#include "slex/recursion.hpp"

namespace slex {

/// The eigenvalue expansion in inverse powers of the shifted angular
/// momentum, in the normalization of the published tables: the reported
/// energy is `normalization * (Q * eps_m2 + sum_n eps[n] / lbar^n)`.
template <class Real>
struct energy_series {
    Real eps_m2 = Real(0);        ///< leading coefficient (order lbar^2 term is Q * eps_m2)
    std::vector<Real> eps;        ///< eps[n] for n = 0 .. depth
    Real normalization = Real(2);  ///< fixed table normalization factor
    std::vector<Real> partial_sums;  ///< partial_sums[K-1] = first K terms, K = 1 .. depth + 2

    /// K-term partial sum (1-based); K = 1 is the leading term alone.
    Real partial_sum(int K) const {
        if (K < 1 || K > static_cast<int>(partial_sums.size()))
            throw domain_error("energy_series: partial-sum index out of range");
        return partial_sums[static_cast<std::size_t>(K - 1)];
    }

    int depth() const { return static_cast<int>(eps.size()) - 1; }
};

/// Assemble the energy series from solved correction tables.
///
/// eps_m2 = 1/(2 q0^2) + V(q0)/Q;  the first-order coefficient
/// (beta + (1 + omega)/2 terms) vanishes identically by the choice of shift
/// and is asserted rather than stored;  eps[0] = (beta(beta+1)/2 + lambda[0])/q0^2
/// and eps[n] = lambda[n]/q0^2 for n >= 1.
template <class Real>
energy_series<Real> make_energy_series(const expansion_context<Real>& ctx,
                                       const correction_tables<Real>& tables) {
    const potential_model<Real> pot(ctx.alpha);
    const Real q0sq = ctx.q0 * ctx.q0;

    // The shift is defined to cancel the order-lbar coefficient exactly.
    const Real first_order = (Real(2) * ctx.beta + Real(1)) / Real(2) + ctx.omega / Real(2);
    if (!(std::abs(first_order) < Real(1e-13)))
        throw solver_error("make_energy_series: first-order coefficient failed to vanish");

    energy_series<Real> es;
    es.eps_m2 = Real(1) / (Real(2) * q0sq) + pot(ctx.q0) / ctx.Q;
    es.eps.resize(tables.lambda.size());
    es.eps[0] = (ctx.beta * (ctx.beta + Real(1)) / Real(2) + tables.lambda[0]) / q0sq;
    for (std::size_t n = 1; n < tables.lambda.size(); ++n) es.eps[n] = tables.lambda[n] / q0sq;

    es.partial_sums.resize(es.eps.size() + 1);
    es.partial_sums[0] = es.normalization * ctx.Q * es.eps_m2;
    Real inv_pow(1);
    for (std::size_t n = 0; n < es.eps.size(); ++n) {
        es.partial_sums[n + 1] = es.partial_sums[n] + es.normalization * es.eps[n] * inv_pow;
        inv_pow /= ctx.lbar;
    }
    return es;
}

/// One-call pipeline: context, jet, recursion, series.
template <class Real>
energy_series<Real> compute_energy_series(Real alpha, int l, int depth = 8) {
    const auto ctx = solve_context(alpha, l);
    const potential_model<Real> pot(alpha, std::max(24, 2 * depth + 4));
    const auto jet = pot.jet(ctx.q0, 2 * depth + 4);
    const auto tables = run_recursion(ctx, jet, depth);
    return make_energy_series(ctx, tables);
}

}  // namespace slex
