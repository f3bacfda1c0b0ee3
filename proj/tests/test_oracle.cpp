#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "slex/energy.hpp"
#include "slex/errors.hpp"
#include "slex/oracle.hpp"

using Real = long double;

namespace {

slex::oracle_config<Real> make_config(Real alpha, int l, Real seed = 0.0L) {
    slex::oracle_config<Real> cfg;
    cfg.alpha = alpha;
    cfg.l = l;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("zero coupling returns the exact oscillator level", "[oracle]") {
    const auto r = slex::solve_ground_state(make_config(0.0L, 7));
    CHECK(r.energy == 17.0L);
    CHECK(r.nodes == 0);
    CHECK(r.iterations == 0);
    CHECK(r.residual == 0.0L);
}

TEST_CASE("integration matches the published reference energies", "[oracle]") {
    struct want_row {
        Real alpha;
        Real seed;
        double energy;  // published to 11 decimals
    };
    const want_row rows[] = {
        {0.05L, 3.0L, 2.99766244644},
        {0.5L, 2.81L, 2.80978632134},
        {2.0L, 1.93L, 1.93233434201},
    };
    for (const auto& row : rows) {
        CAPTURE(static_cast<double>(row.alpha));
        const auto r = slex::solve_ground_state(make_config(row.alpha, 0, row.seed));
        CHECK(r.nodes == 0);
        CHECK(r.iterations > 0);
        CHECK(r.residual < 1e-12L);
        CHECK_THAT(static_cast<double>(r.energy),
                   Catch::Matchers::WithinAbs(row.energy, 5e-11));
    }
}

TEST_CASE("the fallback search window finds the state unseeded", "[oracle]") {
    const auto seeded = slex::solve_ground_state(make_config(0.5L, 0, 2.81L));
    const auto blind = slex::solve_ground_state(make_config(0.5L, 0));
    CHECK(std::abs(seeded.energy - blind.energy) < 1e-11L);
}

TEST_CASE("high angular momentum converges next to an interior defect pole", "[oracle]") {
    // At l = 20 the matching defect has a pole close to the eigenvalue; the
    // node-aware bracket scan must step over it.
    const auto r = slex::solve_ground_state(make_config(0.5L, 20, 29.95L));
    CHECK(r.nodes == 0);
    const auto es = slex::compute_energy_series<Real>(0.5L, 20, 8);
    CHECK(std::abs(r.energy - es.partial_sum(10)) < 1e-9L);
}

TEST_CASE("doubling the mesh moves the eigenvalue by less than 1e-11", "[oracle]") {
    for (Real alpha : {0.05L, 0.5L}) {
        CAPTURE(static_cast<double>(alpha));
        auto cfg = make_config(alpha, 0);
        const auto coarse = slex::solve_ground_state(cfg);
        cfg.mesh_n = 2 * cfg.mesh_n;
        const auto fine = slex::solve_ground_state(cfg);
        CHECK(std::abs(coarse.energy - fine.energy) < 1e-11L);
    }
}

TEST_CASE("enlarging the cutoff moves the eigenvalue by less than 1e-11", "[oracle]") {
    auto cfg = make_config(0.5L, 0, 2.81L);
    const auto base = slex::solve_ground_state(cfg);
    cfg.q_max = base.q_max * 1.5L;
    const auto wide = slex::solve_ground_state(cfg);
    CHECK(std::abs(base.energy - wide.energy) < 1e-11L);
}

TEST_CASE("levels are ordered in the angular momentum", "[oracle]") {
    Real prev = 0.0L;
    for (int l : {0, 1, 2}) {
        const auto r = slex::solve_ground_state(make_config(0.5L, l));
        CHECK(r.energy > prev);
        prev = r.energy;
    }
}

TEST_CASE("repeated runs are bit-identical", "[oracle]") {
    const auto a = slex::solve_ground_state(make_config(0.5L, 1));
    const auto b = slex::solve_ground_state(make_config(0.5L, 1));
    CHECK(a.energy == b.energy);
    CHECK(a.iterations == b.iterations);
    CHECK(a.q_max == b.q_max);
}

TEST_CASE("oracle validates its configuration", "[oracle][errors]") {
    CHECK_THROWS_AS(slex::solve_ground_state(make_config(-0.5L, 0)), slex::domain_error);
    CHECK_THROWS_AS(slex::solve_ground_state(make_config(0.5L, -1)), slex::domain_error);
    auto cfg = make_config(0.5L, 0);
    cfg.mesh_n = 500;
    CHECK_THROWS_AS(slex::solve_ground_state(cfg), slex::domain_error);
    cfg = make_config(0.5L, 0);
    cfg.tol = 0.0L;
    CHECK_THROWS_AS(slex::solve_ground_state(cfg), slex::domain_error);
}

TEST_CASE("a search window with no nodeless state is reported", "[oracle][errors]") {
    auto cfg = make_config(0.5L, 0, 1e6L);
    cfg.mesh_n = 5000;  // keep the failing scan cheap
    CHECK_THROWS_AS(slex::solve_ground_state(cfg), slex::solver_error);
}
