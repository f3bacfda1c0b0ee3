#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "slex/energy.hpp"
#include "slex/errors.hpp"

namespace slex {

/// Rational approximant num(u)/den(u) with den(0) = 1.
template <class Real>
struct pade_approximant {
    int N = 0;  ///< numerator order
    int M = 0;  ///< denominator order
    std::vector<Real> num;  ///< N + 1 coefficients, ascending powers
    std::vector<Real> den;  ///< M + 1 coefficients, den[0] = 1

    Real eval(Real u) const {
        return series::eval(num, u) / series::eval(den, u);
    }

    /// true if den has no zero on (0, u_hi]: sampled sign test on a fine grid
    bool pole_free(Real u_hi, int samples = 64) const {
        Real prev = series::eval(den, Real(0));
        for (int i = 1; i <= samples; ++i) {
            const Real u = u_hi * Real(i) / Real(samples);
            const Real cur = series::eval(den, u);
            if (cur == Real(0) || (cur > Real(0)) != (prev > Real(0))) return false;
            prev = cur;
        }
        return true;
    }
};

namespace detail {

/// Solve A x = b for a small dense system by Gaussian elimination with
/// partial pivoting; also estimates the infinity-norm condition number by
/// forming the inverse column-by-column (systems here are at most ~9x9).
/// Throws degeneracy_error on a vanishing pivot or condition above 1e14.
template <class Real>
std::vector<Real> solve_dense_checked(std::vector<std::vector<Real>> A, std::vector<Real> b) {
    const std::size_t m = b.size();
    Real norm_a(0);
    for (std::size_t i = 0; i < m; ++i) {
        Real row(0);
        for (std::size_t j = 0; j < m; ++j) row += std::abs(A[i][j]);
        norm_a = std::max(norm_a, row);
    }

    // Augment with the identity so one elimination yields both the solution
    // and the inverse (for the condition estimate).
    for (std::size_t i = 0; i < m; ++i) {
        A[i].resize(2 * m + 1, Real(0));
        A[i][m + i] = Real(1);
        A[i][2 * m] = b[i];
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (A[piv][col] == Real(0))
            throw degeneracy_error("pade: singular denominator system");
        std::swap(A[piv], A[col]);
        const Real inv_p = Real(1) / A[col][col];
        for (std::size_t j = col; j <= 2 * m; ++j) A[col][j] *= inv_p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || A[r][col] == Real(0)) continue;
            const Real f = A[r][col];
            for (std::size_t j = col; j <= 2 * m; ++j) A[r][j] -= f * A[col][j];
        }
    }

    Real norm_inv(0);
    for (std::size_t i = 0; i < m; ++i) {
        Real row(0);
        for (std::size_t j = 0; j < m; ++j) row += std::abs(A[i][m + j]);
        norm_inv = std::max(norm_inv, row);
    }
    if (norm_a * norm_inv > Real(1e14))
        throw degeneracy_error("pade: denominator system too ill-conditioned");

    std::vector<Real> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = A[i][2 * m];
    return x;
}

}  // namespace detail

/// Construct the [N/M] rational approximant matching the power series
/// c[0] + c[1] u + ... through order u^{N+M}.
///
/// Denominator coefficients b solve the Toeplitz system
///   sum_{j=1}^{M} b_j c_{N+i-j} = -c_{N+i},  i = 1..M  (c_k = 0 for k < 0),
/// then the numerator follows by convolution.
template <class Real>
pade_approximant<Real> build_pade(std::span<const Real> c, int N, int M) {
    if (N < 0 || M < 0) throw domain_error("build_pade: orders must be non-negative");
    if (static_cast<int>(c.size()) < N + M + 1)
        throw domain_error("build_pade: series too short for requested orders");

    const auto at = [&](int k) { return k >= 0 ? c[static_cast<std::size_t>(k)] : Real(0); };

    pade_approximant<Real> ap;
    ap.N = N;
    ap.M = M;
    ap.den.assign(static_cast<std::size_t>(M) + 1, Real(0));
    ap.den[0] = Real(1);

    if (M > 0) {
        std::vector<std::vector<Real>> A(static_cast<std::size_t>(M),
                                         std::vector<Real>(static_cast<std::size_t>(M)));
        std::vector<Real> rhs(static_cast<std::size_t>(M));
        for (int i = 1; i <= M; ++i) {
            for (int j = 1; j <= M; ++j)
                A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = at(N + i - j);
            rhs[static_cast<std::size_t>(i - 1)] = -at(N + i);
        }
        const auto b = detail::solve_dense_checked(std::move(A), std::move(rhs));
        for (int j = 1; j <= M; ++j) ap.den[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j - 1)];
    }

    ap.num.assign(static_cast<std::size_t>(N) + 1, Real(0));
    for (int i = 0; i <= N; ++i) {
        Real acc = at(i);
        for (int j = 1; j <= std::min(i, M); ++j)
            acc += ap.den[static_cast<std::size_t>(j)] * at(i - j);
        ap.num[static_cast<std::size_t>(i)] = acc;
    }
    return ap;
}

/// Resummed table energy for the row labelled [N,M].
///
/// The published construction applies the [M/N] approximant (numerator order
/// M, denominator order N — the row label lists the denominator first) to the
/// correction series including its identically-vanishing leading slot,
///   f(u) = 0 + eps[0] u + eps[1] u^2 + ...,   u = 1/lbar,
/// and reports  normalization * (Q * eps_m2 + f_[M/N](u) / u).
///
/// For alpha below 1e-8 every approximant degenerates to the plain truncated
/// sum, which is returned directly.  A degenerate system or a denominator
/// sign change on (0, u] raises a degeneracy error — except when the highest
/// coefficient in use contributes less than roundoff to the energy, in which
/// case the approximant is not determined at working precision and the order
/// is walked down one step at a time until a well-posed one is found.
template <class Real>
Real resummed_energy(const expansion_context<Real>& ctx, const energy_series<Real>& series_in,
                     int N, int M) {
    if (N < 0 || M < 0) throw domain_error("resummed_energy: orders must be non-negative");
    if (ctx.alpha < Real(1e-8)) return series_in.partial_sums.back();

    if (static_cast<int>(series_in.eps.size()) < N + M)
        throw domain_error("resummed_energy: energy series too short for requested orders");

    const Real u = Real(1) / ctx.lbar;
    const Real scale = std::max(Real(1), std::abs(series_in.partial_sums.back()));
    int n = N, m = M;
    for (;;) {
        const int need = n + m + 1;  // coefficients consumed, including the zero slot
        std::vector<Real> c(static_cast<std::size_t>(need), Real(0));
        for (int i = 1; i < need; ++i)
            c[static_cast<std::size_t>(i)] = series_in.eps[static_cast<std::size_t>(i - 1)];

        // Row label [N,M] means numerator order M over denominator order N.
        std::string reason;
        try {
            const auto ap = build_pade<Real>(std::span<const Real>(c.data(), c.size()), m, n);
            if (ap.pole_free(u))
                return series_in.normalization * (ctx.Q * series_in.eps_m2 + ap.eval(u) / u);
            reason = "resummed_energy: denominator pole inside (0, 1/lbar]";
        } catch (const degeneracy_error& e) {
            reason = e.what();
        }

        // Shedding the top coefficient is legitimate only while its energy
        // contribution is invisible at working precision.
        const Real discarded = series_in.normalization * std::abs(c.back()) *
                               std::pow(u, Real(n + m - 1));
        if (!(discarded <= Real(1e-13) * scale) || (n == 0 && m <= 1))
            throw degeneracy_error(reason);
        if (m > n)
            --m;
        else
            --n;
    }
}

}  // namespace slex
