#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "slex/context.hpp"
#include "slex/errors.hpp"
#include "slex/potential.hpp"
#include "slex/series.hpp"

namespace slex {

/// Output of the order-by-order Riccati solve.
///
/// `U[k]` and `G[k]` are dense polynomial coefficient vectors in the scaled
/// coordinate x.  Only even series indices carry content: U polynomials hold
/// odd powers of x, G polynomials even powers, and odd-index members vanish
/// identically (their defining equations have zero right-hand sides by
/// parity).  `lambda[n]` are the eigenvalue corrections feeding the energy
/// series, and `B[k]` the interaction-expansion constants, kept for audit
/// and cross-checking against the published first- and second-order closed
/// forms.
template <class Real>
struct correction_tables {
    int depth = 0;
    std::vector<std::vector<Real>> U;
    std::vector<std::vector<Real>> G;
    std::vector<Real> lambda;
    std::vector<Real> B;

    /// D_{m,k}: coefficient of x^{2m-1} in U^{(k)}; D_{0,k} = 0 by construction.
    Real D(int m, int k) const {
        if (m <= 0 || k < 0 || k >= static_cast<int>(U.size())) return Real(0);
        return series::coeff(U[static_cast<std::size_t>(k)],
                             static_cast<std::size_t>(2 * m - 1));
    }

    /// C_{m,k}: coefficient of x^{2m} in G^{(k)}.
    Real C(int m, int k) const {
        if (m < 0 || k < 0 || k >= static_cast<int>(G.size())) return Real(0);
        return series::coeff(G[static_cast<std::size_t>(k)],
                             static_cast<std::size_t>(2 * m));
    }
};

/// Run the Riccati hierarchy to the requested depth.
///
/// `depth` is the highest eigenvalue-correction index produced (lambda[0]
/// through lambda[depth]), which requires iterating the hierarchy through
/// perturbative order 2*depth + 2 and consuming interaction derivatives up
/// to order 2*depth + 4.  The jet must be centred on ctx.q0.
template <class Real>
correction_tables<Real> run_recursion(const expansion_context<Real>& ctx,
                                      const taylor_jet<Real>& jet, int depth) {
    if (depth < 1) throw domain_error("run_recursion: depth must be at least 1");
    if (std::abs(jet.center - ctx.q0) >
        Real(8) * std::numeric_limits<Real>::epsilon() * std::max(Real(1), ctx.q0))
        throw domain_error("run_recursion: jet is not centred on the expansion point");
    const int k_max = 2 * depth + 2;
    if (jet.order() < k_max + 2)
        throw capability_error("run_recursion: jet order too small; need 2*depth + 4");

    const Real om = ctx.omega;
    const Real beta = ctx.beta;
    const Real Q = ctx.Q;
    const Real q0 = ctx.q0;
    const Real two_beta_1 = Real(2) * beta + Real(1);

    // Interaction series coefficients a_n and expansion constants
    // B_k = (-1)^k (k+3)/2 + q0^{k+4} a_{k+2} / Q.
    std::vector<Real> a(static_cast<std::size_t>(k_max + 3));
    for (int n = 0; n <= k_max + 2; ++n)
        a[static_cast<std::size_t>(n)] = jet.series_coefficient(n);

    correction_tables<Real> out;
    out.depth = depth;
    out.U.assign(static_cast<std::size_t>(k_max + 1), {});
    out.G.assign(static_cast<std::size_t>(k_max + 1), {});
    out.lambda.assign(static_cast<std::size_t>(depth + 1), Real(0));
    out.B.assign(static_cast<std::size_t>(k_max + 1), Real(0));

    Real q0_pow = q0 * q0 * q0 * q0;  // q0^{k+4} running power, k from 0
    for (int k = 1; k <= k_max; ++k) {
        q0_pow *= q0;
        const Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
        out.B[static_cast<std::size_t>(k)] =
            sign * Real(k + 3) / Real(2) + q0_pow * a[static_cast<std::size_t>(k + 2)] / Q;
    }

    out.U[0] = {Real(0), -om};  // U^{(0)} = -omega x

    for (int k = 1; k <= k_max; ++k) {
        const std::size_t deg = static_cast<std::size_t>(k) + 2;

        // Known side K_k(x): the interaction polynomial minus the products of
        // previously solved orders (the unknown's own couplings are moved
        // into the triangular solve below).
        std::vector<Real> K(deg + 1, Real(0));
        const Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
        if (k >= 2) K[static_cast<std::size_t>(k - 2)] += sign * beta * (beta + Real(1)) * Real(k - 1) / Real(2);
        K[static_cast<std::size_t>(k)] += sign * two_beta_1 * Real(k + 1) / Real(2);
        K[deg] += out.B[static_cast<std::size_t>(k)];

        std::vector<Real> prod;
        for (int n = 1; n < k; ++n)
            series::add_product(prod, out.U[static_cast<std::size_t>(n)],
                                out.U[static_cast<std::size_t>(k - n)], deg);
        for (int n = 0; n <= k - 2; ++n)
            series::add_product(prod, out.G[static_cast<std::size_t>(n)],
                                out.G[static_cast<std::size_t>(k - 2 - n)], deg);
        if (!prod.empty())
            for (std::size_t i = 0; i < prod.size(); ++i) K[i] -= prod[i] / Real(2);

        std::vector<Real> cross;
        for (int n = 1; n < k; ++n)
            series::add_product(cross, out.U[static_cast<std::size_t>(n)],
                                out.G[static_cast<std::size_t>(k - 1 - n)], deg);
        if (!cross.empty())
            for (std::size_t i = 0; i < cross.size(); ++i) K[i] -= cross[i];

        if (k % 2 == 0) {
            // Even order: solve for U^{(k)} (odd powers of x) top-down, then
            // read off the eigenvalue correction from the constant row.
            const int jd = (k + 2) / 2;
            std::vector<Real> D(static_cast<std::size_t>(jd + 2), Real(0));
            for (int j = jd; j >= 1; --j)
                D[static_cast<std::size_t>(j)] =
                    (Real(2 * j + 1) * D[static_cast<std::size_t>(j + 1)] / Real(2) -
                     series::coeff(K, static_cast<std::size_t>(2 * j))) /
                    om;
            auto& Uk = out.U[static_cast<std::size_t>(k)];
            Uk.assign(static_cast<std::size_t>(2 * jd), Real(0));
            for (int j = 1; j <= jd; ++j) Uk[static_cast<std::size_t>(2 * j - 1)] = D[static_cast<std::size_t>(j)];

            const Real rhs = series::coeff(K, 0) - D[1] / Real(2);
            if (k == 2)
                out.lambda[0] = rhs - beta * (beta + Real(1)) / Real(2);
            else
                out.lambda[static_cast<std::size_t>(k / 2 - 1)] = rhs;
        } else {
            // Odd order: solve for G^{(k-1)} (even powers of x) top-down.
            // The constant row of K vanishes identically by parity, so no
            // eigenvalue correction arises at odd orders.
            const int jg = (k + 1) / 2;
            std::vector<Real> C(static_cast<std::size_t>(jg + 2), Real(0));
            for (int j = jg; j >= 0; --j)
                C[static_cast<std::size_t>(j)] =
                    (Real(j + 1) * C[static_cast<std::size_t>(j + 1)] -
                     series::coeff(K, static_cast<std::size_t>(2 * j + 1))) /
                    om;
            auto& Gk = out.G[static_cast<std::size_t>(k - 1)];
            Gk.assign(static_cast<std::size_t>(2 * jg + 1), Real(0));
            for (int j = 0; j <= jg; ++j) Gk[static_cast<std::size_t>(2 * j)] = C[static_cast<std::size_t>(j)];
        }
    }

    return out;
}

/// Unnormalized wavefunction Psi(x) = exp(S(x)) with S the term-by-term
/// integral of the solved expansion of Psi'/Psi, truncated at perturbative
/// order `order` (a U^{(n)} term carries order n, a G^{(n)} term order n+1).
/// Order 0 reproduces the Gaussian exp(-omega x^2 / 2); Psi(0) = 1 always.
template <class Real>
Real wavefunction(const expansion_context<Real>& ctx, const correction_tables<Real>& tables,
                  Real x, int order) {
    if (order < 0) throw domain_error("wavefunction: order must be non-negative");
    if (order > 2 * tables.depth + 2)
        throw capability_error("wavefunction: order exceeds the solved depth");

    const Real rt = std::sqrt(ctx.lbar);
    Real S(0);
    for (int n = 0; n <= order; n += 2) {
        const auto& Un = tables.U[static_cast<std::size_t>(n)];
        if (!Un.empty()) {
            Real integ(0);
            for (std::size_t p = Un.size(); p-- > 0;) integ = integ * x + Un[p] / Real(p + 1);
            S += integ * x / std::pow(rt, Real(n));
        }
        if (n + 1 <= order) {
            const auto& Gn = tables.G[static_cast<std::size_t>(n)];
            if (!Gn.empty()) {
                Real integ(0);
                for (std::size_t p = Gn.size(); p-- > 0;) integ = integ * x + Gn[p] / Real(p + 1);
                S += integ * x / std::pow(rt, Real(n + 1));
            }
        }
    }
    return std::exp(S);
}

}  // namespace slex
