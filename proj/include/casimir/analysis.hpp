#pragma once

#include <cstddef>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/spectral.hpp"

namespace casimir {

// Logarithmically spaced grid, inclusive of both endpoints, strictly
// increasing. n >= 2 unless lo == hi (then a single point).
std::vector<double> log_grid(double lo, double hi, int n);

// Energy/force sweep over a gap-ratio grid at constant contrast. When auto_L
// is set, each point runs its own convergence scan and L_used records the
// result; otherwise L_used is the fixed cutoff everywhere. Grid points are
// computed in parallel and stored by index, so output order is deterministic.
struct SweepResult {
    std::vector<double> t;        // z/a, strictly increasing
    std::vector<double> energy;   // E~
    std::vector<double> force;    // aF~
    std::vector<int> L_used;
};

SweepResult sweep(const std::vector<double>& t_grid, double fc, int L);
SweepResult sweep_auto_L(const std::vector<double>& t_grid, double fc,
                         double tol, int L_max);

// Smallest L with |E~_L - E~_{L-1}| <= tol * |E~_L| at gap ratio t.
// capped = true when L_max was reached without convergence (result.L = L_max).
struct ConvergenceResult {
    int L;
    double energy;
    bool capped;
};

ConvergenceResult convergence_scan(double t, double fc, double tol, int L_max);

// Relative force deviation of a truncated solution from a reference cutoff,
// |F_LW - F_LH| / |F_LH|, per grid point. Also returns both force curves.
struct TruncationResult {
    std::vector<double> t;
    std::vector<double> force_high;   // cutoff L_high
    std::vector<double> force_low;    // cutoff L_low
    std::vector<double> rel_diff;
};

TruncationResult truncation_difference(int L_high, int L_low,
                                       const std::vector<double>& t_grid,
                                       double fc);

// Least-squares slope of ln|y| against ln(x) over [begin, end) of the
// series. Needs >= 3 points, x > 0, y of one sign and nonzero.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y,
                    std::size_t begin, std::size_t end);

// Material-swap asymmetry of the self-consistent two-material problem:
// energies/forces for (A sphere over B plane) and (B sphere over A plane) and
// their normalized differences 2|X_AB - X_BA| / |X_AB + X_BA| per grid point.
struct DissimilarSweep {
    std::vector<double> t;
    std::vector<double> energy_ab, energy_ba;   // eV
    std::vector<double> force_ab, force_ba;     // a*F, eV
    std::vector<double> delta_energy, delta_force;
};

DissimilarSweep dissimilar_difference(const Material& a, const Material& b,
                                      const std::vector<double>& t_grid, int L);

// Large-separation limit of the force asymmetry: the dipolar modes give
//   delta_F -> 2 (1/sqrt(3) - 1/sqrt(2)) / (1/sqrt(3) + 1/sqrt(2))
//              * |wpA - wpB| / (wpA + wpB)|  (in absolute value).
double asymptotic_delta(const Material& a, const Material& b);

} // namespace casimir
