#include "casimir/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace casimir {

Geometry::Geometry(double a, double z) : radius(a), gap(z) {
    if (!(a > 0.0)) throw std::domain_error("Geometry: radius must be positive");
    if (!(z > 0.0)) throw std::domain_error("Geometry: gap must be positive");
}

namespace {

double check_x(double x) {
    if (!(x >= 0.0) || x >= 0.5) {
        throw std::domain_error("coupling: x must lie in [0, 1/2), got " +
                                std::to_string(x));
    }
    return x;
}

// ln C(l,l',m); all factorials through lgamma so l + l' may exceed the
// overflow range of a raw factorial. Arguments are ordered first so the
// l <-> l' symmetry holds exactly, not just to rounding.
double log_coupling(int l, int lp, int m) {
    if (l > lp) std::swap(l, lp);
    return std::lgamma(l + lp + 1) -
           0.5 * (std::log(2.0 * l + 1.0) + std::log(2.0 * lp + 1.0) +
                  std::lgamma(l + m + 1) + std::lgamma(l - m + 1) +
                  std::lgamma(lp + m + 1) + std::lgamma(lp - m + 1));
}

} // namespace

double coupling_coefficient(int l, int lp, int m) {
    const int am = m < 0 ? -m : m;
    if (l < 1 || lp < 1 || am > l || am > lp) {
        throw std::domain_error("coupling_coefficient: need l,l' >= 1, |m| <= min(l,l')");
    }
    return std::exp(log_coupling(l, lp, am));
}

double a_tensor_element(int l, int m, int lp, int mp, const Geometry& g) {
    if (m != mp) return 0.0;
    const double h = 2.0 * g.center_distance();
    // 4*pi * C / h^(l+l'+1), assembled in the log domain: h^(l+l'+1) alone
    // overflows for large l at small h in other unit systems.
    const double ln = std::log(4.0 * M_PI) + log_coupling(l, lp, std::abs(m)) -
                      (l + lp + 1) * std::log(h);
    return std::exp(ln);
}

CouplingBlock coupling_matrix(int m, int L, double x) {
    check_x(x);
    if (m < 0 || m > L) {
        throw std::domain_error("coupling_matrix: need 0 <= m <= L");
    }
    const int l0 = m > 1 ? m : 1;
    const int n = L - l0 + 1;
    CouplingBlock block{m, L, x, Eigen::MatrixXd(n, n)};
    if (x == 0.0) {
        block.w.setZero();
        return block;
    }
    const double lx = std::log(x);
    for (int i = 0; i < n; ++i) {
        const int l = l0 + i;
        for (int j = i; j < n; ++j) {
            const int lp = l0 + j;
            const double ln = 0.5 * (std::log(double(l)) + std::log(double(lp))) +
                              (l + lp + 1) * lx + log_coupling(l, lp, m);
            block.w(i, j) = block.w(j, i) = std::exp(ln);
        }
    }
    return block;
}

Eigen::MatrixXd coupling_matrix_derivative(const CouplingBlock& block) {
    const int n = block.size();
    Eigen::MatrixXd d(n, n);
    const double x = block.x;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int power = block.l_of(i) + block.l_of(j) + 1;
            d(i, j) = -2.0 * x * power * block.w(i, j);
        }
    }
    return d;
}

} // namespace casimir
