#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "slex/errors.hpp"
#include "slex/potential.hpp"
#include "slex/series.hpp"

using Real = long double;

namespace {

// 4th-order central stencils with one Richardson step (the leading h^4 error
// is eliminated), accurate enough to pin the jet at relative 1e-6 even where
// the target derivative sits four orders of magnitude below the function.
template <class F>
Real fd_derivative(const F& f, Real q, int order, Real h) {
    struct term {
        int k;
        Real c;
    };
    static const std::vector<term> stencils[4] = {
        {{-2, Real(1) / 12}, {-1, Real(-8) / 12}, {1, Real(8) / 12}, {2, Real(-1) / 12}},
        {{-2, Real(-1) / 12},
         {-1, Real(16) / 12},
         {0, Real(-30) / 12},
         {1, Real(16) / 12},
         {2, Real(-1) / 12}},
        {{-3, Real(1) / 8},
         {-2, Real(-1)},
         {-1, Real(13) / 8},
         {1, Real(-13) / 8},
         {2, Real(1)},
         {3, Real(-1) / 8}},
        {{-3, Real(-1) / 6},
         {-2, Real(2)},
         {-1, Real(-13) / 2},
         {0, Real(28) / 3},
         {1, Real(-13) / 2},
         {2, Real(2)},
         {3, Real(-1) / 6}},
    };
    const auto apply = [&](Real step) {
        Real acc(0);
        for (const auto& t : stencils[order - 1]) acc += t.c * f(q + Real(t.k) * step);
        return acc / std::pow(step, Real(order));
    };
    return (Real(16) * apply(h / 2) - apply(h)) / Real(15);
}

}  // namespace

TEST_CASE("potential value and slope match high-precision fixtures", "[potential]") {
    const slex::potential_model<Real> pot(0.5L);
    CHECK_THAT(static_cast<double>(pot(2.0L)),
               Catch::Matchers::WithinRel(1.6568542494923802, 1e-15));
    CHECK_THAT(static_cast<double>(pot.derivative(2.0L)),
               Catch::Matchers::WithinRel(1.414213562373095, 1e-15));
    CHECK(pot(0.0L) == 0.0L);
}

TEST_CASE("small-coupling evaluation is cancellation-free", "[potential]") {
    // At coupling 1e-8 the value must track q^2/2 to 1e-12 q^4.
    const slex::potential_model<Real> tiny(1e-8L);
    for (Real q = 0.0L; q <= 10.0L; q += 0.5L) {
        const Real v = tiny(q);
        CHECK(std::abs(v - q * q / 2) <= 1e-12L * q * q * q * q);
    }

    // At coupling 1e-5 the explicit expansion of the square root is exact to
    // machine precision; the rationalized evaluation must agree.
    const Real a = 1e-5L;
    const slex::potential_model<Real> pot(a);
    for (Real q : {0.3L, 1.0L, 2.0L}) {
        const Real x = a * a * q * q;
        const Real series = q * q / 2 * (1 - x / 4 + x * x / 8);
        CHECK_THAT(static_cast<double>(pot(q)),
                   Catch::Matchers::WithinRel(static_cast<double>(series), 1e-15));
    }
}

TEST_CASE("Taylor jet matches the independent high-precision fixture", "[potential]") {
    const slex::potential_model<Real> pot(0.5L);
    const auto jet = pot.jet(2.0L, 8);
    REQUIRE(jet.order() >= 6);
    CHECK(jet.center == 2.0L);

    static const double want[] = {1.65685424949238,      1.414213562373095,
                                  0.1767766952966369,    -0.04419417382415922,
                                  0.008286407592029854,  -0.0006905339660024878,
                                  -0.0002589502372509329};
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        CHECK_THAT(static_cast<double>(jet.series_coefficient(n)),
                   Catch::Matchers::WithinRel(want[n], 1e-13));
    }

    // Stored derivatives are the series coefficients times n!.
    CHECK_THAT(static_cast<double>(jet.derivative(3)),
               Catch::Matchers::WithinRel(want[3] * 6.0, 1e-13));
}

TEST_CASE("jet derivatives agree with central finite differences", "[potential]") {
    for (Real alpha : {0.01L, 0.1L, 0.5L, 2.0L}) {
        const slex::potential_model<Real> pot(alpha);
        const auto f = [&](Real q) { return pot(q); };
        for (Real q : {0.5L, 1.0L, 2.0L, 5.0L}) {
            const auto jet = pot.jet(q, 8);
            const Real scale = std::min(std::max(q, 0.5L), 1 / alpha + 0.05L);
            for (int order = 1; order <= 4; ++order) {
                CAPTURE(static_cast<double>(alpha), static_cast<double>(q), order);
                const Real h = (order <= 2 ? 0.05L : 0.08L) * scale;
                const Real fd = fd_derivative(f, q, order, h);
                const Real jv = jet.derivative(order);
                if (std::abs(fd) > 1e-8L) {
                    CHECK(std::abs(jv - fd) <= 1e-6L * std::abs(fd));
                } else {
                    // The fourth derivative has an exact interior zero (at
                    // alpha^2 q^2 = 1/4); both sides must agree it vanishes.
                    CHECK(std::abs(jv) <= 1e-8L);
                }
            }
        }
    }
}

TEST_CASE("degree-8 jet re-expansion reproduces the potential nearby", "[potential]") {
    for (Real alpha : {0.1L, 0.5L, 2.0L}) {
        const slex::potential_model<Real> pot(alpha);
        for (Real q0 : {0.5L, 1.3L, 2.0L}) {
            const auto jet = pot.jet(q0, 8);
            Real sum = 0, dq = 0.01L, pw = 1;
            for (int n = 0; n <= 8; ++n, pw *= dq) sum += jet.series_coefficient(n) * pw;
            CAPTURE(static_cast<double>(alpha), static_cast<double>(q0));
            CHECK_THAT(static_cast<double>(sum),
                       Catch::Matchers::WithinRel(static_cast<double>(pot(q0 + dq)), 1e-10));
        }
    }
}

TEST_CASE("zero coupling reduces exactly to the parabola", "[potential]") {
    const slex::potential_model<Real> pot(0.0L);
    for (Real q : {0.0L, 0.7L, 3.0L, 9.5L}) CHECK(pot(q) == q * q / 2);
    const auto jet = pot.jet(1.3L, 12);
    CHECK(jet.series_coefficient(0) == 1.3L * 1.3L / 2);
    CHECK(jet.series_coefficient(1) == 1.3L);
    CHECK(jet.series_coefficient(2) == 0.5L);
    for (int n = 3; n <= 12; ++n) CHECK(jet.series_coefficient(n) == 0.0L);
}

TEST_CASE("potential rejects invalid arguments", "[potential][errors]") {
    CHECK_THROWS_AS(slex::potential_model<Real>(-0.1L), slex::domain_error);
    CHECK_THROWS_AS(slex::potential_model<Real>(0.5L, 8), slex::domain_error);
    const slex::potential_model<Real> pot(0.5L);
    CHECK_THROWS_AS(pot(-1.0L), slex::domain_error);
    CHECK_THROWS_AS(pot.jet(-2.0L, 8), slex::domain_error);
    CHECK_THROWS_AS(pot.jet(0.0L, 8), slex::domain_error);
    CHECK_THROWS_AS(pot.jet(1.0L, -1), slex::domain_error);
    CHECK_THROWS_AS(pot.jet(1.0L, 25), slex::capability_error);
}

TEST_CASE("square-root power series squares back to its input", "[series]") {
    const std::vector<Real> s = {4.0L, 0.3L, -0.2L, 0.05L, 0.01L, -0.003L};
    const auto t = slex::series::sqrt_series(s, 5);
    REQUIRE(t.size() == 6);
    CHECK_THAT(static_cast<double>(t[0]), Catch::Matchers::WithinRel(2.0, 1e-18));
    std::vector<Real> sq(6, 0.0L);
    slex::series::add_product(sq, t, t, 5);
    for (int k = 0; k <= 5; ++k) {
        CAPTURE(k);
        CHECK(std::abs(sq[static_cast<std::size_t>(k)] - s[static_cast<std::size_t>(k)]) <=
              1e-17L * std::abs(s[0]));
    }

    // perfect square: sqrt(1 + 2z + z^2) = 1 + z exactly
    const auto lin = slex::series::sqrt_series(std::vector<Real>{1.0L, 2.0L, 1.0L}, 4);
    CHECK(lin[0] == 1.0L);
    CHECK(lin[1] == 1.0L);
    for (int k = 2; k <= 4; ++k) CHECK(std::abs(lin[static_cast<std::size_t>(k)]) < 1e-18L);
}

TEST_CASE("polynomial evaluation and truncated products", "[series]") {
    const std::vector<Real> p = {1.0L, 2.0L, 3.0L};
    CHECK(slex::series::eval(p, 0.5L) == 2.75L);
    CHECK(slex::series::coeff(p, 2) == 3.0L);
    CHECK(slex::series::coeff(p, 7) == 0.0L);

    std::vector<Real> acc(4, 0.0L);
    slex::series::add_product(acc, std::vector<Real>{1.0L, 1.0L},
                              std::vector<Real>{1.0L, -1.0L, 2.0L}, 3);
    CHECK(acc[0] == 1.0L);
    CHECK(acc[1] == 0.0L);
    CHECK(acc[2] == 1.0L);
    CHECK(acc[3] == 2.0L);
}
