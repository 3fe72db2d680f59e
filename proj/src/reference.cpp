#include "casimir/spectral.hpp"

namespace casimir::ref {

// Plain serial loops over the same block kernels as the OpenMP drivers.
// Kept as the ground truth for bit-identity tests and the benchmark baseline.

namespace {
double block_weight(int m) { return m == 0 ? 1.0 : 2.0; }
} // namespace

double zero_point_energy(double x, double fc, int L) {
    if (L < 1) throw std::domain_error("multipole cutoff L must be >= 1");
    double sum = 0.0;
    for (int m = 0; m <= L; ++m) {
        sum += block_weight(m) * detail::block_energy_term(m, L, x, fc);
    }
    return 0.5 * sum;
}

double dissimilar_energy(const Material& sphere, const Material& plane,
                         double t, int L) {
    if (L < 1) throw std::domain_error("multipole cutoff L must be >= 1");
    if (!(t > 0.0)) {
        throw std::domain_error("dissimilar_energy: gap ratio must be positive");
    }
    const double ratio = plane.plasma_ev / sphere.plasma_ev;
    const double r = ratio * ratio;
    const double x = x_from_gap_ratio(t);
    double sum = 0.0;
    for (int m = 0; m <= L; ++m) {
        sum += block_weight(m) * detail::block_energy_term_dissimilar(m, L, x, r);
    }
    return 0.5 * sphere.plasma_ev * sum;
}

} // namespace casimir::ref
