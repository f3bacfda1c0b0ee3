#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "slex/errors.hpp"
#include "slex/potential.hpp"

namespace slex {

/// Configuration for the independent eigenvalue check (Numerov two-sided
/// shooting on the radial equation -psi'' + [l(l+1)/q^2 + 2V(q)] psi = E psi).
template <class Real>
struct oracle_config {
    Real alpha = Real(0);
    int l = 0;
    int mesh_n = 50000;       ///< uniform mesh points on (0, q_max]
    Real tol = Real(1e-12);   ///< required eigenvalue bracket width (relative)
    Real q_max = Real(0);     ///< integration cutoff; 0 selects it automatically
    Real seed = Real(0);      ///< optional energy estimate; 0 means none
};

template <class Real>
struct oracle_result {
    Real energy = Real(0);
    int nodes = 0;
    int iterations = 0;
    Real residual = Real(0);  ///< matching defect at the converged energy
    Real q_max = Real(0);     ///< cutoff actually used
    int mesh_n = 0;           ///< mesh actually used
};

namespace detail {

/// One two-sided Numerov shot at trial energy eps.
/// Returns the log-derivative matching defect at the outer turning point and
/// the node count of the outward solution.
template <class Real>
struct shot_outcome {
    Real defect = Real(0);
    int nodes = 0;
    bool finite = false;
};

template <class Real>
shot_outcome<Real> numerov_shot(const std::vector<Real>& W, Real h, Real alpha, int l, Real eps) {
    const int n = static_cast<int>(W.size());
    std::vector<Real> f(W.size());
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = W[static_cast<std::size_t>(i)] - eps;
    const auto g = [&](int i) { return Real(1) - h * h * f[static_cast<std::size_t>(i)] / Real(12); };

    // match at the outermost classically allowed point
    int m = n - 2;
    for (int i = n - 2; i >= 1; --i)
        if (f[static_cast<std::size_t>(i)] <= Real(0)) {
            m = i;
            break;
        }
    m = std::max(m, 3);

    // outward sweep, seeded by the origin series of the working equation:
    // psi = q^{l+1} (1 + c1 q^2 + c2 q^4 + c3 q^6)
    int i0 = 0;
    while (i0 < m - 2 && std::abs(h * h * f[static_cast<std::size_t>(i0)] / Real(12)) > Real(0.1)) ++i0;
    const Real c1 = -eps / Real(4 * l + 6);
    const Real c2 = (Real(1) - eps * c1) / Real(8 * l + 20);
    const Real c3 = (-eps * c2 + c1 - alpha * alpha / Real(4)) / Real(12 * l + 42);
    const auto origin_series = [&](Real q) {
        const Real q2 = q * q;
        return std::pow(q, Real(l + 1)) * (Real(1) + q2 * (c1 + q2 * (c2 + q2 * c3)));
    };

    std::vector<Real> y(static_cast<std::size_t>(m) + 2, Real(0));
    const auto qa = [&](int i) { return h * Real(i + 1); };
    y[static_cast<std::size_t>(i0)] = origin_series(qa(i0));
    y[static_cast<std::size_t>(i0 + 1)] = origin_series(qa(i0 + 1));
    int nodes = 0;
    for (int i = i0 + 1; i <= m; ++i) {
        y[static_cast<std::size_t>(i + 1)] =
            (Real(2) * y[static_cast<std::size_t>(i)] *
                 (Real(1) + Real(5) * h * h * f[static_cast<std::size_t>(i)] / Real(12)) -
             y[static_cast<std::size_t>(i - 1)] * g(i - 1)) /
            g(i + 1);
        if (y[static_cast<std::size_t>(i + 1)] * y[static_cast<std::size_t>(i)] < Real(0)) ++nodes;
    }

    // inward sweep from a WKB-decaying start at the cutoff
    std::vector<Real> z(W.size(), Real(0));
    z[static_cast<std::size_t>(n - 1)] = Real(1);
    z[static_cast<std::size_t>(n - 2)] =
        std::exp(std::sqrt(std::max(f[static_cast<std::size_t>(n - 2)], Real(0))) * h);
    for (int i = n - 2; i >= m; --i)
        z[static_cast<std::size_t>(i - 1)] =
            (Real(2) * z[static_cast<std::size_t>(i)] *
                 (Real(1) + Real(5) * h * h * f[static_cast<std::size_t>(i)] / Real(12)) -
             z[static_cast<std::size_t>(i + 1)] * g(i + 1)) /
            g(i - 1);

    shot_outcome<Real> out;
    out.nodes = nodes;
    const Real ym = y[static_cast<std::size_t>(m)];
    const Real zm = z[static_cast<std::size_t>(m)];
    out.defect = (y[static_cast<std::size_t>(m + 1)] - y[static_cast<std::size_t>(m - 1)]) / (Real(2) * h * ym) -
                 (z[static_cast<std::size_t>(m + 1)] - z[static_cast<std::size_t>(m - 1)]) / (Real(2) * h * zm);
    out.finite = std::isfinite(out.defect);
    return out;
}

}  // namespace detail

/// Ground-state eigenvalue of the working equation by two-sided Numerov
/// shooting with bisection on the log-derivative matching defect.
///
/// The search window comes from `seed` (+-10%) when given, else from the
/// variational bounds 0 < E <= 2l + 3; it widens up to 8 times if needed.
/// Candidate brackets whose endpoints carry nodes are rejected, which steps
/// over the defect poles that sit next to the true root when the matching
/// point crosses a zero of the outward solution.  alpha = 0 returns the
/// exact harmonic value 2l + 3 directly.
template <class Real>
oracle_result<Real> solve_ground_state(const oracle_config<Real>& cfg) {
    if (!(cfg.alpha >= Real(0))) throw domain_error("oracle: alpha must be non-negative");
    if (cfg.l < 0) throw domain_error("oracle: l must be non-negative");
    if (cfg.mesh_n < 1000) throw domain_error("oracle: mesh too coarse");
    if (!(cfg.tol > Real(0))) throw domain_error("oracle: tol must be positive");

    oracle_result<Real> res;
    if (cfg.alpha == Real(0)) {
        res.energy = Real(2 * cfg.l + 3);
        res.mesh_n = cfg.mesh_n;
        return res;
    }

    const potential_model<Real> pot(cfg.alpha);
    const auto weff = [&](Real q) {
        return Real(cfg.l * (cfg.l + 1)) / (q * q) + Real(2) * pot(q);
    };

    Real lo, hi;
    if (cfg.seed > Real(0)) {
        lo = Real(0.9) * cfg.seed;
        hi = Real(1.1) * cfg.seed;
    } else {
        lo = Real(0.02) * Real(2 * cfg.l + 3);
        hi = Real(1.001) * Real(2 * cfg.l + 3);
    }

    // Cutoff: outer turning point at the window top, extended until the
    // WKB tail action reaches 42 (boundary influence ~ e^{-2*42}).
    Real q_max = cfg.q_max;
    if (q_max <= Real(0)) {
        Real qt = std::sqrt(Real(2 * cfg.l + 3));
        while (weff(qt) < hi) qt *= Real(1.05);
        const auto tail_action = [&](Real qmax) {
            const int steps = 2048;
            Real acc(0);
            const Real dq = (qmax - qt) / Real(steps);
            for (int i = 0; i < steps; ++i) {
                const Real q = qt + dq * (Real(i) + Real(0.5));
                acc += std::sqrt(std::max(weff(q) - hi, Real(0))) * dq;
            }
            return acc;
        };
        q_max = Real(1.2) * qt;
        int guard = 0;
        while (tail_action(q_max) < Real(42) && ++guard < 200) q_max *= Real(1.15);
    }

    const int n = cfg.mesh_n;
    const Real h = q_max / Real(n);
    std::vector<Real> W(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) W[static_cast<std::size_t>(i)] = weff(h * Real(i + 1));

    const auto shoot = [&](Real eps) { return detail::numerov_shot(W, h, cfg.alpha, cfg.l, eps); };

    // Scan the window for an adjacent nodeless sign-change pair, widening on failure.
    Real a = Real(0), b = Real(0);
    detail::shot_outcome<Real> sa;
    bool found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
        constexpr int scan_points = 33;
        std::vector<Real> es(scan_points);
        std::vector<detail::shot_outcome<Real>> outs(scan_points);
        for (int i = 0; i < scan_points; ++i) {
            es[static_cast<std::size_t>(i)] = lo + (hi - lo) * Real(i) / Real(scan_points - 1);
            outs[static_cast<std::size_t>(i)] = shoot(es[static_cast<std::size_t>(i)]);
        }
        for (int i = 0; i + 1 < scan_points; ++i) {
            const auto& u = outs[static_cast<std::size_t>(i)];
            const auto& v = outs[static_cast<std::size_t>(i + 1)];
            if (u.finite && v.finite && u.nodes == 0 && v.nodes == 0 &&
                (u.defect > Real(0)) != (v.defect > Real(0))) {
                a = es[static_cast<std::size_t>(i)];
                b = es[static_cast<std::size_t>(i + 1)];
                sa = u;
                found = true;
                break;
            }
        }
        if (!found) {
            const Real c = (lo + hi) / Real(2);
            const Real w = (hi - lo) * Real(0.8);  // widen total span by 1.6x
            lo = std::max(c - w, Real(1e-9));
            hi = c + w;
        }
    }
    if (!found) throw solver_error("oracle: no nodeless sign change of the matching defect");

    int iterations = 0;
    while (b - a > cfg.tol * std::max(Real(1), std::abs(b)) * Real(1e-3) && iterations < 200) {
        const Real mid = (a + b) / Real(2);
        if (mid == a || mid == b) break;
        const auto sm = shoot(mid);
        ++iterations;
        if ((sm.defect > Real(0)) == (sa.defect > Real(0))) {
            a = mid;
            sa = sm;
        } else {
            b = mid;
        }
    }

    const Real energy = (a + b) / Real(2);
    if (b - a > cfg.tol * std::max(Real(1), std::abs(energy)))
        throw solver_error("oracle: eigenvalue bisection failed to converge");
    const auto fin = shoot(energy);
    if (fin.nodes != 0) throw solver_error("oracle: converged to a state with nodes");

    res.energy = energy;
    res.nodes = fin.nodes;
    res.iterations = iterations;
    res.residual = std::abs(fin.defect);
    res.q_max = q_max;
    res.mesh_n = n;
    return res;
}

}  // namespace slex
