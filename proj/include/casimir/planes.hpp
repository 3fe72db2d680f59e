#pragma once

#include "casimir/materials.hpp"

namespace casimir {

// Coupled surface-plasmon branches of two identical Drude half-spaces at
// separation z, for in-plane wavevector k:
//   (omega_pm/omega_p)^2 = (1 pm e^{-kz})/2.
// omega_plus >= omega_p/sqrt(2) >= omega_minus for all kz.
struct PlateModes {
    double omega_plus;   // units of omega_p
    double omega_minus;
};

PlateModes plate_modes(double kz);

// Dimensionless mode-sum integral
//   I = int_0^inf t [ sqrt(1+e^{-t}) + sqrt(1-e^{-t}) - 2 ] dt  (< 0),
// evaluated once by adaptive Gauss-Kronrod and cached.
double plate_integral();

// Zero-point interaction energy per unit area of two half-spaces of the given
// material, V(z) = hbar omega_p I / (4 pi sqrt(2) z^2), in eV / length^2
// (z in the caller's length unit). Binding: V < 0, V z^2 constant.
double plate_energy_per_area(const Material& m, double z);

// Proximity-theorem sphere-plane force F = 2 pi R V(z), eV / length.
double proximity_force(const Material& m, double radius, double z);

} // namespace casimir
