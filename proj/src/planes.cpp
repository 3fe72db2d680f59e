#include "casimir/planes.hpp"

#include <cmath>

#include "casimir/quadrature.hpp"

namespace casimir {

PlateModes plate_modes(double kz) {
    if (!(kz > 0.0)) throw std::domain_error("plate_modes: kz must be positive");
    const double e = std::exp(-kz);
    return {std::sqrt(0.5 * (1.0 + e)), std::sqrt(0.5 * (1.0 - e))};
}

double plate_integral() {
    // Mode sum over k of sqrt(1+e^{-2kz}) + sqrt(1-e^{-2kz}) - 2, reduced by
    // t = 2kz. Integrand decays as -t e^{-2t}/4; [0, 40] carries the full
    // double-precision weight.
    static const double value = integrate_gk(
        [](double t) {
            const double e = std::exp(-t);
            return t * (std::sqrt(1.0 + e) + std::sqrt(1.0 - e) - 2.0);
        },
        0.0, 40.0, 1e-13, 1e-16);
    return value;
}

double plate_energy_per_area(const Material& m, double z) {
    if (!(z > 0.0)) {
        throw std::domain_error("plate_energy_per_area: z must be positive");
    }
    return m.plasma_ev * plate_integral() /
           (4.0 * M_PI * std::sqrt(2.0) * z * z);
}

double proximity_force(const Material& m, double radius, double z) {
    if (!(radius > 0.0)) {
        throw std::domain_error("proximity_force: radius must be positive");
    }
    return 2.0 * M_PI * radius * plate_energy_per_area(m, z);
}

} // namespace casimir
