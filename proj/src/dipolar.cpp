#include "casimir/dipolar.hpp"

#include <cmath>

namespace casimir {

namespace {

constexpr double third = 1.0 / 3.0;

void check_x(double x) {
    if (!(x > 0.0) || x >= 0.5) {
        throw std::domain_error("dipolar: x must lie in (0, 1/2)");
    }
}

// Roots of lambda^2 + b lambda + c with two real roots, computed without
// cancellation: q = -(b + sign(b) sqrt(b^2 - 4c))/2, roots q and c/q.
void stable_quadratic(double b, double c, double out[2]) {
    const double disc = b * b - 4.0 * c;
    if (disc < 0.0) {
        throw NumericalError("dipolar: complex quadratic roots");
    }
    const double s = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? s : -s));
    const double r1 = q;
    const double r2 = c / q;
    out[0] = std::min(r1, r2);
    out[1] = std::max(r1, r2);
}

} // namespace

DipolarModes dipolar_modes_constant_fc(double x, double fc) {
    check_x(x);
    const double k = x * x * x;
    return {third + 2.0 * fc * k * third, third + fc * k * third};
}

DipolarDrudeModes dipolar_modes_drude(double x, double r) {
    check_x(x);
    if (!(r > 0.0)) throw std::domain_error("dipolar: r must be positive");
    const double k = x * x * x;
    DipolarDrudeModes modes{};
    // lambda^2 - lambda (1/3 + r/2) + r/2 (1/3 - w) = 0
    stable_quadratic(-(third + 0.5 * r), 0.5 * r * (third - 2.0 * k * third),
                     modes.longitudinal);
    stable_quadratic(-(third + 0.5 * r), 0.5 * r * (third - k * third),
                     modes.transverse);
    return modes;
}

double dipolar_energy(double x, double fc) {
    const DipolarModes m = dipolar_modes_constant_fc(x, fc);
    if (m.longitudinal <= 0.0 || m.transverse <= 0.0) {
        throw ModeCollapseError("dipolar mode collapse at x=" + std::to_string(x));
    }
    const double s0 = std::sqrt(third);
    return 0.5 * (std::sqrt(m.longitudinal) - s0 +
                  2.0 * (std::sqrt(m.transverse) - s0));
}

double dipolar_force(double t, double fc) {
    if (!(t > 0.0)) throw std::domain_error("dipolar_force: t must be positive");
    const double x = 1.0 / (2.0 * (1.0 + t));
    const DipolarModes m = dipolar_modes_constant_fc(x, fc);
    if (m.longitudinal <= 0.0 || m.transverse <= 0.0) {
        throw ModeCollapseError("dipolar mode collapse at z/a=" + std::to_string(t));
    }
    const double x4 = x * x * x * x;
    return fc * x4 * (1.0 / std::sqrt(m.longitudinal) +
                      1.0 / std::sqrt(m.transverse));
}

std::vector<ResponseSample> response_curve(const std::vector<double>& omega_grid,
                                           double x, double r) {
    check_x(x);
    const double k = x * x * x;
    std::vector<ResponseSample> out;
    out.reserve(omega_grid.size());
    for (const double w : omega_grid) {
        if (!(w > 0.0)) {
            throw std::domain_error("response_curve: omega/omega_p must be positive");
        }
        const double lambda = w * w;
        const double denom = 2.0 * lambda - r;
        if (std::abs(denom) < 1e-12 * r) {
            throw PoleError("response_curve: contrast pole at omega/omega_p=" +
                            std::to_string(w));
        }
        out.push_back({w, 1.0 - 3.0 * lambda, r / denom * k});
    }
    return out;
}

} // namespace casimir
