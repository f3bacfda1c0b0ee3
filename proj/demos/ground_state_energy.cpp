// Minimal walkthrough: expand the ground-state energy of the square-root
// oscillator at one coupling, print the partial sums, and compare against
// the direct numerical integration of the radial equation.

#include <cstdio>

#include "slex/slex.hpp"

int main() {
    using Real = long double;
    const Real alpha = 0.5L;
    const int l = 0;

    const auto ctx = slex::solve_context<Real>(alpha, l);
    const auto series = slex::compute_energy_series<Real>(alpha, l, /*depth=*/8);

    std::printf("coupling %.3g, angular momentum %d\n", static_cast<double>(alpha), l);
    std::printf("expansion point q0 = %.15Lg, effective l = %.15Lg\n\n", ctx.q0, ctx.lbar);

    std::printf("%4s  %-20s\n", "K", "partial sum");
    for (int K = 1; K <= 10; ++K)
        std::printf("%4d  %-20.15Lg\n", K, series.partial_sum(K));

    slex::oracle_config<Real> cfg;
    cfg.alpha = alpha;
    cfg.l = l;
    cfg.seed = series.partial_sum(4);
    const auto dni = slex::solve_ground_state(cfg);

    std::printf("\nintegration oracle: %.15Lg (%d bisection steps, %d nodes)\n", dni.energy,
                dni.iterations, dni.nodes);
    std::printf("gap |K=10 - oracle| = %.3Lg\n",
                std::abs(series.partial_sum(10) - dni.energy));
    return 0;
}
