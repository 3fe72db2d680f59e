#pragma once

#include <Eigen/Dense>

#include "casimir/errors.hpp"

namespace casimir {

// Sphere radius a above a plane at gap z (sphere surface to plane).
// The multipole expansion parameter is x = a/(2(z+a)), always in (0, 1/2).
struct Geometry {
    double radius;
    double gap;

    Geometry(double a, double z);

    double center_distance() const { return radius + gap; }
    double gap_ratio() const { return gap / radius; }         // z/a
    double x() const { return radius / (2.0 * center_distance()); }
};

inline double x_from_gap_ratio(double t) { return 1.0 / (2.0 * (1.0 + t)); }
inline double gap_ratio_from_x(double x) { return 1.0 / (2.0 * x) - 1.0; }

// Angular factor of the multipole-multipole image coupling,
//
//   C(l,l',m) = sqrt( ((l+l')!)^2 /
//               ((2l+1)(2l'+1)(l+m)!(l-m)!(l'+m)!(l'-m)!) ).
//
// Evaluated by accumulating log-gamma terms and exponentiating once, so it
// stays finite where the raw factorials overflow (l + l' > 170).
// Symmetric in l <-> l' and under m -> -m. Requires |m| <= min(l, l').
double coupling_coefficient(int l, int lp, int m);

// Full image-interaction tensor between multipoles (l,m) and (l',m') for a
// sphere of radius a at gap z, azimuthally diagonal:
//   A = delta_{mm'} * 4*pi * C(l,l',m) / (2(z+a))^(l+l'+1).
// Brute-force oracle for coupling_matrix; not used on the hot path.
double a_tensor_element(int l, int m, int lp, int mp, const Geometry& g);

// Symmetric off-diagonal block W at fixed m,
//   W_{ll'} = sqrt(l*l') * x^(l+l'+1) * C(l,l',m),  l,l' in [max(1,m), L].
// x = 0 is admitted and gives the zero matrix (infinite-separation limit);
// otherwise requires 0 < x < 1/2 and 0 <= m <= L.
struct CouplingBlock {
    int m;
    int L;
    double x;
    Eigen::MatrixXd w;

    int size() const { return static_cast<int>(w.rows()); }
    int l_min() const { return m > 1 ? m : 1; }
    int l_of(int i) const { return l_min() + i; }
};

CouplingBlock coupling_matrix(int m, int L, double x);

// d/dt of the block at fixed m, with t = z/a. Entries scale as x^(l+l'+1), so
//   dW/dt = dW/dx * dx/dt,  dW/dx|_{ll'} = (l+l'+1) W_{ll'}/x,  dx/dt = -2x^2.
Eigen::MatrixXd coupling_matrix_derivative(const CouplingBlock& block);

} // namespace casimir
