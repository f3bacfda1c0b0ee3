#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace slex {

/// Dense polynomial / truncated power-series helpers.
///
/// A `std::vector<Real>` holds coefficients in ascending powers; an empty
/// vector is the zero polynomial.  All products truncate at the order the
/// caller asks for, which keeps perturbation-order bookkeeping explicit.
namespace series {

/// coefficient of x^k, treating out-of-range indices as zero
template <class Real>
Real coeff(const std::vector<Real>& p, std::size_t k) {
    return k < p.size() ? p[k] : Real(0);
}

/// p(x) by Horner's rule
template <class Real>
Real eval(const std::vector<Real>& p, Real x) {
    Real acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

/// c += a * b, keeping terms through x^max_power
template <class Real>
void add_product(std::vector<Real>& c, const std::vector<Real>& a,
                 const std::vector<Real>& b, std::size_t max_power) {
    if (a.empty() || b.empty()) return;
    if (c.size() < max_power + 1) c.resize(max_power + 1, Real(0));
    for (std::size_t i = 0; i < a.size() && i <= max_power; ++i) {
        if (a[i] == Real(0)) continue;
        const std::size_t jmax = std::min(b.size(), max_power + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a[i] * b[j];
    }
}

/// Truncated square root of a power series with s[0] > 0:
/// returns t with t(x)^2 = s(x) + O(x^{order+1}).
///
/// Standard recurrence: t0 = sqrt(s0),
/// t_i = (s_i - sum_{j=1}^{i-1} t_j t_{i-j}) / (2 t0).
template <class Real>
std::vector<Real> sqrt_series(const std::vector<Real>& s, std::size_t order) {
    std::vector<Real> t(order + 1, Real(0));
    const Real t0 = std::sqrt(s.at(0));
    t[0] = t0;
    for (std::size_t i = 1; i <= order; ++i) {
        Real acc = coeff(s, i);
        for (std::size_t j = 1; j < i; ++j) acc -= t[j] * t[i - j];
        t[i] = acc / (Real(2) * t0);
    }
    return t;
}

}  // namespace series
}  // namespace slex
