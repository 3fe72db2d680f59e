#include "casimir/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <omp.h>

namespace casimir {

namespace {

void check_cutoff(int L) {
    if (L < 1) throw std::domain_error("multipole cutoff L must be >= 1");
}

std::string at_location(int m, double x, int L) {
    return " at m=" + std::to_string(m) + ", x=" + std::to_string(x) +
           " (z/a=" + std::to_string(gap_ratio_from_x(x)) + "), L=" +
           std::to_string(L);
}

Eigen::MatrixXd block_hamiltonian(const CouplingBlock& cb, double fc) {
    Eigen::MatrixXd h = fc * cb.w;
    for (int i = 0; i < cb.size(); ++i) {
        h(i, i) += sphere_eigenvalue(cb.l_of(i));
    }
    return h;
}

double block_weight(int m) { return m == 0 ? 1.0 : 2.0; }

// Fill partial[m] for m = 0..L in parallel; exceptions thrown by a block are
// rethrown after the region (they must not escape an OpenMP loop body).
template <typename F>
std::vector<double> block_partials(int L, F&& term) {
    std::vector<double> partial(L + 1);
    std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
    for (int m = 0; m <= L; ++m) {
        try {
            partial[m] = term(m);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return partial;
}

// Richardson-extrapolated central difference of a scalar function.
template <typename F>
double richardson_derivative(F&& f, double t, double rel_step) {
    const double h = rel_step * t;
    const double d1 = (f(t + h) - f(t - h)) / (2.0 * h);
    const double d2 = (f(t + 0.5 * h) - f(t - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

} // namespace

SpectralBlock eigen_block(int m, int L, double x, double fc) {
    check_cutoff(L);
    const CouplingBlock cb = coupling_matrix(m, L, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block_hamiltonian(cb, fc));
    if (es.info() != Eigen::Success) {
        throw NumericalError("eigen_block: solver failed" + at_location(m, x, L));
    }
    return {m, L, x, fc, es.eigenvalues(), es.eigenvectors()};
}

namespace detail {

double block_energy_term(int m, int L, double x, double fc) {
    const CouplingBlock cb = coupling_matrix(m, L, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        block_hamiltonian(cb, fc), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalError("energy: solver failed" + at_location(m, x, L));
    }
    double coupled = 0.0, free_sphere = 0.0;
    for (int i = 0; i < cb.size(); ++i) {
        const double ns = es.eigenvalues()[i];
        if (ns <= 0.0) {
            throw ModeCollapseError("mode collapse: n_s <= 0" +
                                    at_location(m, x, L));
        }
        coupled += std::sqrt(ns);
        free_sphere += std::sqrt(sphere_eigenvalue(cb.l_of(i)));
    }
    return coupled - free_sphere;
}

double block_force_term(int m, int L, double t, double fc) {
    const double x = x_from_gap_ratio(t);
    const CouplingBlock cb = coupling_matrix(m, L, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block_hamiltonian(cb, fc));
    if (es.info() != Eigen::Success) {
        throw NumericalError("force: solver failed" + at_location(m, x, L));
    }
    const Eigen::MatrixXd dw = coupling_matrix_derivative(cb);
    // dn_s/dt = f_c v_s^T (dW/dt) v_s, then dE_m/dt = sum_s dn_s/dt / (2 sqrt(n_s)).
    double d = 0.0;
    for (int i = 0; i < cb.size(); ++i) {
        const double ns = es.eigenvalues()[i];
        if (ns <= 0.0) {
            throw ModeCollapseError("mode collapse: n_s <= 0" +
                                    at_location(m, x, L));
        }
        const auto v = es.eigenvectors().col(i);
        const double dn = fc * v.dot(dw * v);
        d += dn / (2.0 * std::sqrt(ns));
    }
    return d;
}

double block_energy_term_dissimilar(int m, int L, double x, double r) {
    const std::vector<double> lambda = dissimilar_modes(m, L, x, r);
    double coupled = 0.0;
    for (const double lam : lambda) coupled += std::sqrt(lam);
    // Infinite-separation spectrum is exactly {n_l0} U {r/2, n-fold}.
    const int l0 = m > 1 ? m : 1;
    double reference = 0.0;
    for (int l = l0; l <= L; ++l) {
        reference += std::sqrt(sphere_eigenvalue(l)) + std::sqrt(0.5 * r);
    }
    return coupled - reference;
}

} // namespace detail

double zero_point_energy(double x, double fc, int L) {
    check_cutoff(L);
    const std::vector<double> partial = block_partials(
        L, [&](int m) { return detail::block_energy_term(m, L, x, fc); });
    // Fixed-order reduction: result is bit-identical for any worker count.
    double sum = 0.0;
    for (int m = 0; m <= L; ++m) sum += block_weight(m) * partial[m];
    return 0.5 * sum;
}

ForceResult force(double t, double fc, int L) {
    check_cutoff(L);
    if (!(t > 0.0)) throw std::domain_error("force: gap ratio must be positive");
    const std::vector<double> partial = block_partials(
        L, [&](int m) { return detail::block_force_term(m, L, t, fc); });
    double de_dt = 0.0;
    for (int m = 0; m <= L; ++m) de_dt += block_weight(m) * partial[m];
    const double analytic = -0.5 * de_dt;

    // Relative step 1e-3 with one Richardson level: large enough that
    // eigensolver noise stays ~1e-8 of the force, small enough that the
    // residual truncation error is far below it.
    const double fd = -richardson_derivative(
        [fc, L](double tt) { return zero_point_energy(x_from_gap_ratio(tt), fc, L); },
        t, 1e-3);
    const double scale = std::max(std::abs(analytic), std::abs(fd));
    if (std::abs(analytic - fd) > 1e-4 * scale) {
        throw ConsistencyError(
            "force: analytic/finite-difference disagreement at z/a=" +
            std::to_string(t) + ", L=" + std::to_string(L));
    }
    return {analytic, fd};
}

ModeSet mode_frequencies(const SpectralBlock& block, const Material& sphere) {
    const double g = 0.5 * sphere.damping_ratio;
    ModeSet out{block.m, block.x, {}, true};
    out.omega_over_wp.reserve(block.eigenvalues.size());
    for (int i = 0; i < block.eigenvalues.size(); ++i) {
        const double ns = block.eigenvalues[i];
        if (ns <= 100.0 * g * g) out.valid = false;
        out.omega_over_wp.emplace_back(std::sqrt(std::max(ns - g * g, 0.0)), -g);
    }
    return out;
}

std::vector<double> dissimilar_modes(int m, int L, double x, double r) {
    check_cutoff(L);
    if (!(r > 0.0)) throw std::domain_error("dissimilar_modes: r must be positive");
    const CouplingBlock cb = coupling_matrix(m, L, x);
    const int n = cb.size();

    // lambda^2 I - lambda (N0 + r/2 I) + r/2 (N0 - W) = 0, linearized as the
    // block companion [[0, I], [-A0, -A1]] with A1 = -(N0 + r/2 I),
    // A0 = r/2 (N0 - W).
    Eigen::MatrixXd a0 = -0.5 * r * cb.w;
    Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double n0 = sphere_eigenvalue(cb.l_of(i));
        a0(i, i) += 0.5 * r * n0;
        a1(i, i) = -(n0 + 0.5 * r);
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    companion.topRightCorner(n, n).setIdentity();
    companion.bottomLeftCorner(n, n) = -a0;
    companion.bottomRightCorner(n, n) = -a1;

    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    if (es.info() != Eigen::Success) {
        throw NumericalError("dissimilar_modes: solver failed" +
                             at_location(m, x, L));
    }
    std::vector<double> lambda;
    lambda.reserve(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        const std::complex<double> ev = es.eigenvalues()[i];
        if (std::abs(ev.imag()) > 1e-8) {
            throw NonRealModeError("dissimilar_modes: complex root " +
                                   std::to_string(ev.real()) + " + " +
                                   std::to_string(ev.imag()) + "i" +
                                   at_location(m, x, L));
        }
        if (ev.real() <= 0.0) {
            throw ModeCollapseError("dissimilar_modes: lambda <= 0" +
                                    at_location(m, x, L));
        }
        lambda.push_back(ev.real());
    }
    std::sort(lambda.begin(), lambda.end());
    return lambda;
}

double dissimilar_energy(const Material& sphere, const Material& plane,
                         double t, int L) {
    check_cutoff(L);
    if (!(t > 0.0)) {
        throw std::domain_error("dissimilar_energy: gap ratio must be positive");
    }
    const double ratio = plane.plasma_ev / sphere.plasma_ev;
    const double r = ratio * ratio;
    const double x = x_from_gap_ratio(t);
    const std::vector<double> partial = block_partials(L, [&](int m) {
        return detail::block_energy_term_dissimilar(m, L, x, r);
    });
    double sum = 0.0;
    for (int m = 0; m <= L; ++m) sum += block_weight(m) * partial[m];
    return 0.5 * sphere.plasma_ev * sum;
}

double dissimilar_force(const Material& sphere, const Material& plane,
                        double t, int L) {
    return -richardson_derivative(
        [&](double tt) { return dissimilar_energy(sphere, plane, tt, L); },
        t, 1e-4);
}

} // namespace casimir
