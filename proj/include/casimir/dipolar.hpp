#pragma once

#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

// Closed forms for the L = 1 (image-dipole) problem. These duplicate the
// spectral path on purpose: they are the independent reference the L = 1
// matrix results are tested against.

// Squared mode frequencies (omega/omega_p)^2 of the dipole above a constant-
// contrast plane. The transverse mode is doubly degenerate.
//   longitudinal: 1/3 + 2 f_c x^3 / 3
//   transverse:   1/3 +   f_c x^3 / 3
struct DipolarModes {
    double longitudinal;
    double transverse;
};

DipolarModes dipolar_modes_constant_fc(double x, double fc);

// Dipole above a lossless Drude plane, contrast evaluated self-consistently:
// each polarization gives a quadratic in lambda,
//   lambda^2 - lambda (1/3 + r/2) + (r/2)(1/3 - w) = 0,
// w = 2x^3/3 (longitudinal) or x^3/3 (transverse). Both roots are returned
// per polarization (sphere-like branch first, plane-like second).
struct DipolarDrudeModes {
    double longitudinal[2];
    double transverse[2];
};

DipolarDrudeModes dipolar_modes_drude(double x, double r);

// Dimensionless dipolar zero-point energy and force (constant contrast):
//   E~ = 1/2 [ sqrt(u_l) - sqrt(1/3) + 2 (sqrt(u_t) - sqrt(1/3)) ]
//   aF~ = f_c x^4 (1/sqrt(u_l) + 1/sqrt(u_t))   (exact derivative in t = z/a)
double dipolar_energy(double x, double fc);
double dipolar_force(double t, double fc);

// Samples of the graphical mode construction at frequency ratios w = omega/wp:
// the inverse dipole polarizability 1 - 3w^2 and the image-coupling term
// f_c(w) x^3 with f_c = r/(2w^2 - r). Their intersections are the dipolar
// Drude modes.
struct ResponseSample {
    double omega_over_wp;
    double inv_polarizability;
    double image_term;
};

std::vector<ResponseSample> response_curve(const std::vector<double>& omega_grid,
                                           double x, double r);

} // namespace casimir
