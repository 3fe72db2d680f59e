#pragma once

#include <vector>

#include <Eigen/Dense>

#include "casimir/coupling.hpp"
#include "casimir/materials.hpp"

namespace casimir {

// Depolarization factor of multipole order l; the squared mode frequency of
// the free sphere, (omega_l/omega_p)^2.
inline double sphere_eigenvalue(int l) { return l / (2.0 * l + 1.0); }

// One azimuthal block of the coupled sphere-plane problem at constant
// contrast: H = diag(n_l0) + f_c W. H is symmetric; eigenvalues ascending,
// eigenvectors the matching columns.
struct SpectralBlock {
    int m;
    int L;
    double x;
    double fc;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

SpectralBlock eigen_block(int m, int L, double x, double fc);

// Number of coupled modes kept at multipole cutoff L, counting +-m: L(L+2).
inline int mode_count(int L) { return L * (L + 2); }

// Dimensionless zero-point energy at cutoff L,
//   E~ = E/(hbar omega_p)
//      = 1/2 sum_m weight(m) [ sum_s sqrt(n_s(x)) - sum_l sqrt(n_l0) ],
// weight(m) = 1 for m = 0 and 2 for m >= 1. Negative for f_c in [-1, 0).
// Throws ModeCollapseError if any n_s <= 0.
double zero_point_energy(double x, double fc, int L);

// Dimensionless force a*F~ = -dE~/d(z/a) at gap ratio t = z/a.
// `analytic` differentiates each eigenvalue in place (dn_s/dt = f_c v^T W' v);
// `finite_difference` is a Richardson-extrapolated central difference computed
// alongside as a cross-check. Disagreement beyond 1e-4 relative raises
// ConsistencyError; typical agreement is 1e-8 or better.
struct ForceResult {
    double analytic;
    double finite_difference;
    double value() const { return analytic; }
};

ForceResult force(double t, double fc, int L);

// Surface-mode frequencies of one block for a damped Drude sphere,
//   omega/omega_p = -i gamma + sqrt(n_s - gamma^2),  gamma = damping/2 ratio.
// The real-frequency form is only trustworthy when min(n_s) > 100 gamma_h^2;
// `valid` records that check (gamma_h = damping_ratio/2).
struct ModeSet {
    int m;
    double x;
    std::vector<std::complex<double>> omega_over_wp;
    bool valid;
};

ModeSet mode_frequencies(const SpectralBlock& block, const Material& sphere);

// --- Dissimilar sphere/plane materials (self-consistent contrast) ---
//
// With a lossless Drude plane the contrast depends on the mode itself,
// f_c(lambda) = r/(2 lambda - r), r = (wp_plane/wp_sphere)^2, and the block
// problem becomes quadratic in lambda = (omega/omega_p_sphere)^2:
//   lambda^2 I - lambda (N0 + r/2 I) + r/2 (N0 - W) = 0.
// Solved by companion linearization; all 2n roots must be real (imaginary
// part < 1e-8, else NonRealModeError) and positive (else ModeCollapseError).
// Returned ascending.
std::vector<double> dissimilar_modes(int m, int L, double x, double r);

// Zero-point energy in eV relative to infinite separation,
//   E = (hbar wp_sphere / 2) sum_m weight(m) [ sum sqrt(lambda(x))
//                                            - sum sqrt(lambda(0)) ],
// where the x = 0 spectrum is exactly {n_l0} U {r/2 (n-fold)}.
double dissimilar_energy(const Material& sphere, const Material& plane,
                         double t, int L);

// a*F in eV: -dE/d(z/a) by Richardson-extrapolated central difference,
// relative step 1e-4.
double dissimilar_force(const Material& sphere, const Material& plane,
                        double t, int L);

namespace detail {
// Single-block energy terms, shared by the OpenMP drivers and the serial
// reference implementation so both sum identical values in identical order.
double block_energy_term(int m, int L, double x, double fc);
double block_energy_term_dissimilar(int m, int L, double x, double r);
double block_force_term(int m, int L, double t, double fc);
} // namespace detail

namespace ref {
// Serial reference drivers (plain loops over the same block kernels).
double zero_point_energy(double x, double fc, int L);
double dissimilar_energy(const Material& sphere, const Material& plane,
                         double t, int L);
} // namespace ref

} // namespace casimir
