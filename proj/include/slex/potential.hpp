#pragma once

#include <cmath>
#include <vector>

#include "slex/errors.hpp"

namespace slex {

/// Taylor data of the interaction at an expansion point.
///
/// `derivs[n]` holds the n-th derivative d^n V / dq^n evaluated at `center`,
/// so `derivs[0]` is the potential value itself.  The recursion consumes the
/// associated power-series coefficients derivs[n]/n!.
template <class Real>
struct taylor_jet {
    Real center = Real(0);
    std::vector<Real> derivs;

    int order() const { return static_cast<int>(derivs.size()) - 1; }

    Real derivative(int n) const {
        if (n < 0 || n > order()) throw domain_error("taylor_jet: derivative index out of range");
        return derivs[static_cast<std::size_t>(n)];
    }

    /// coefficient of (q - center)^n, i.e. derivs[n]/n!
    Real series_coefficient(int n) const {
        Real c = derivative(n);
        for (int k = 2; k <= n; ++k) c /= Real(k);
        return c;
    }
};

/// The square-root interaction V(q) = (sqrt(1 + a^2 q^2) - 1) / a^2.
///
/// Evaluation uses the algebraically identical rationalized form
/// V(q) = q^2 / (1 + sqrt(1 + a^2 q^2)), which has no subtractive
/// cancellation for small a*q and reduces smoothly to the harmonic
/// well q^2/2 as a -> 0.
template <class Real>
class potential_model {
public:
    /// `max_order`: highest Taylor order `jet` may be asked for.  Depth-d
    /// energy series need jets of order 2d + 4, so the default supports the
    /// standard ten-term series (d = 8 -> order 20) with headroom.
    explicit potential_model(Real alpha, int max_order = 24)
        : alpha_(alpha), max_order_(max_order) {
        if (!(alpha >= Real(0))) throw domain_error("potential_model: alpha must be non-negative");
        if (max_order < 12) throw domain_error("potential_model: max_order must be at least 12");
    }

    Real alpha() const { return alpha_; }
    int max_order() const { return max_order_; }

    Real operator()(Real q) const {
        if (!(q >= Real(0))) throw domain_error("potential_model: q must be non-negative");
        const Real z = alpha_ * q;
        return q * q / (Real(1) + std::sqrt(Real(1) + z * z));
    }

    /// First derivative V'(q) = q / sqrt(1 + a^2 q^2).
    Real derivative(Real q) const {
        if (!(q >= Real(0))) throw domain_error("potential_model: q must be non-negative");
        const Real z = alpha_ * q;
        return q / std::sqrt(Real(1) + z * z);
    }

    /// Taylor jet of V about q0 > 0 through the requested order.
    ///
    /// Built by power-series composition: with s(d) = 1 + a^2 (q0 + d)^2 and
    /// t = sqrt(s) (square-root series recurrence), the series coefficients
    /// of V are a_n = t_n / a^2 for n >= 1.  The division by a^2 is carried
    /// out symbolically inside the recurrence,
    ///     a_i = ([i=1] 2 q0 + [i=2] - a^2 sum_{j=1}^{i-1} a_j a_{i-j}) / (2 t0),
    /// which is branch-free and exact in the harmonic limit a = 0.
    taylor_jet<Real> jet(Real q0, int order) const {
        if (!(q0 > Real(0))) throw domain_error("potential_model: jet center must be positive");
        if (order < 0) throw domain_error("potential_model: jet order must be non-negative");
        if (order > max_order_)
            throw capability_error("potential_model: requested jet order exceeds max_order");

        const Real a2 = alpha_ * alpha_;
        const Real t0 = std::sqrt(Real(1) + a2 * q0 * q0);

        std::vector<Real> c(static_cast<std::size_t>(order) + 1, Real(0));
        c[0] = (*this)(q0);
        for (int i = 1; i <= order; ++i) {
            Real acc(0);
            if (i == 1) acc = Real(2) * q0;
            if (i == 2) acc = Real(1);
            for (int j = 1; j < i; ++j)
                acc -= a2 * c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
            c[static_cast<std::size_t>(i)] = acc / (Real(2) * t0);
        }

        taylor_jet<Real> out;
        out.center = q0;
        out.derivs.resize(c.size());
        Real fact(1);
        for (int n = 0; n <= order; ++n) {
            if (n >= 2) fact *= Real(n);
            out.derivs[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n)] * fact;
        }
        return out;
    }

private:
    Real alpha_;
    int max_order_;
};

}  // namespace slex
