#include "casimir/analysis.hpp"

#include <cmath>
#include <exception>

#include <omp.h>

namespace casimir {

namespace {

// Run a grid loop in parallel, storing by index; the first exception thrown
// by any iteration is rethrown after the region ends.
template <typename F>
void parallel_grid(std::size_t n, F&& body) {
    std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

void check_grid(const std::vector<double>& t) {
    if (t.empty()) throw std::domain_error("grid must be non-empty");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 0.0)) throw std::domain_error("grid points must be positive");
        if (i > 0 && !(t[i] > t[i - 1])) {
            throw std::domain_error("grid must be strictly increasing");
        }
    }
}

} // namespace

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi >= lo)) {
        throw std::domain_error("log_grid: need 0 < lo <= hi");
    }
    if (lo == hi) return {lo};
    if (n < 2) throw std::domain_error("log_grid: need n >= 2 for lo < hi");
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

SweepResult sweep(const std::vector<double>& t_grid, double fc, int L) {
    check_grid(t_grid);
    const std::size_t n = t_grid.size();
    SweepResult out{t_grid, std::vector<double>(n), std::vector<double>(n),
                    std::vector<int>(n, L)};
    parallel_grid(n, [&](std::size_t i) {
        out.energy[i] = zero_point_energy(x_from_gap_ratio(t_grid[i]), fc, L);
        out.force[i] = force(t_grid[i], fc, L).value();
    });
    return out;
}

SweepResult sweep_auto_L(const std::vector<double>& t_grid, double fc,
                         double tol, int L_max) {
    check_grid(t_grid);
    const std::size_t n = t_grid.size();
    SweepResult out{t_grid, std::vector<double>(n), std::vector<double>(n),
                    std::vector<int>(n)};
    parallel_grid(n, [&](std::size_t i) {
        const ConvergenceResult c = convergence_scan(t_grid[i], fc, tol, L_max);
        out.L_used[i] = c.L;
        out.energy[i] = c.energy;
        out.force[i] = force(t_grid[i], fc, c.L).value();
    });
    return out;
}

ConvergenceResult convergence_scan(double t, double fc, double tol, int L_max) {
    if (!(tol > 0.0)) throw std::domain_error("convergence_scan: tol must be positive");
    if (L_max < 2) throw std::domain_error("convergence_scan: L_max must be >= 2");
    const double x = x_from_gap_ratio(t);
    double prev = zero_point_energy(x, fc, 1);
    for (int L = 2; L <= L_max; ++L) {
        const double cur = zero_point_energy(x, fc, L);
        if (std::abs(cur - prev) <= tol * std::abs(cur)) {
            return {L, cur, false};
        }
        prev = cur;
    }
    return {L_max, prev, true};
}

TruncationResult truncation_difference(int L_high, int L_low,
                                       const std::vector<double>& t_grid,
                                       double fc) {
    if (L_low < 1 || L_high < L_low) {
        throw std::domain_error("truncation_difference: need 1 <= L_low <= L_high");
    }
    check_grid(t_grid);
    const std::size_t n = t_grid.size();
    TruncationResult out{t_grid, std::vector<double>(n), std::vector<double>(n),
                         std::vector<double>(n)};
    parallel_grid(n, [&](std::size_t i) {
        out.force_high[i] = force(t_grid[i], fc, L_high).value();
        out.force_low[i] = force(t_grid[i], fc, L_low).value();
        out.rel_diff[i] = std::abs(out.force_low[i] - out.force_high[i]) /
                          std::abs(out.force_high[i]);
    });
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y,
                    std::size_t begin, std::size_t end) {
    if (x.size() != y.size() || end > x.size() || begin >= end) {
        throw std::domain_error("loglog_slope: bad window");
    }
    const std::size_t n = end - begin;
    if (n < 3) throw std::domain_error("loglog_slope: need at least 3 points");
    const double first = y[begin];
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        if (!(x[i] > 0.0)) {
            throw std::domain_error("loglog_slope: abscissa must be positive");
        }
        if (y[i] == 0.0 || (y[i] > 0.0) != (first > 0.0)) {
            throw std::domain_error("loglog_slope: values must be nonzero, one sign");
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DissimilarSweep dissimilar_difference(const Material& a, const Material& b,
                                      const std::vector<double>& t_grid, int L) {
    check_grid(t_grid);
    const std::size_t n = t_grid.size();
    DissimilarSweep out;
    out.t = t_grid;
    out.energy_ab.resize(n);
    out.energy_ba.resize(n);
    out.force_ab.resize(n);
    out.force_ba.resize(n);
    out.delta_energy.resize(n);
    out.delta_force.resize(n);
    parallel_grid(n, [&](std::size_t i) {
        const double t = t_grid[i];
        out.energy_ab[i] = dissimilar_energy(a, b, t, L);
        out.energy_ba[i] = dissimilar_energy(b, a, t, L);
        out.force_ab[i] = dissimilar_force(a, b, t, L);
        out.force_ba[i] = dissimilar_force(b, a, t, L);
        out.delta_energy[i] = 2.0 * std::abs(out.energy_ab[i] - out.energy_ba[i]) /
                              std::abs(out.energy_ab[i] + out.energy_ba[i]);
        out.delta_force[i] = 2.0 * std::abs(out.force_ab[i] - out.force_ba[i]) /
                             std::abs(out.force_ab[i] + out.force_ba[i]);
    });
    return out;
}

double asymptotic_delta(const Material& a, const Material& b) {
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s2 = 1.0 / std::sqrt(2.0);
    const double prefactor = 2.0 * std::abs(s3 - s2) / (s3 + s2);
    return prefactor * std::abs(a.plasma_ev - b.plasma_ev) /
           (a.plasma_ev + b.plasma_ev);
}

} // namespace casimir
