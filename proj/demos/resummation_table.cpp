// Rational resummation demo: print a small grid of resummed ground-state
// energies across couplings for each supported [N,M] order, showing how the
// resummation stabilises the slowly-converging strong-coupling series.

#include <cstdio>

#include "slex/slex.hpp"

int main() {
    using Real = long double;
    const Real couplings[] = {0.01L, 0.1L, 0.5L, 2.0L};
    const int l = 0;

    std::printf("%7s", "[N,M]");
    for (const Real a : couplings) std::printf("  %-17.3g", static_cast<double>(a));
    std::printf("\n");

    for (const auto& [n, m] : slex::benchmark::pade_orders()) {
        std::printf("  [%d,%d]", n, m);
        for (const Real a : couplings) {
            const auto ctx = slex::solve_context<Real>(a, l);
            const auto series = slex::compute_energy_series<Real>(a, l, /*depth=*/8);
            try {
                std::printf("  %-17.12Lf", slex::resummed_energy(ctx, series, n, m));
            } catch (const slex::degeneracy_error&) {
                // this order is degenerate at the evaluation point
                std::printf("  %-17s", "pole");
            }
        }
        std::printf("\n");
    }
    return 0;
}
