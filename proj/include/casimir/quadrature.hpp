#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

// Adaptive Gauss-Kronrod G7-K15 on [a, b]: repeatedly bisect the interval
// with the largest error estimate until the global estimate meets tolerance.
// The integrand must be finite on the closed interval.
template <typename F>
double integrate_gk(F&& f, double a, double b, double rel_tol = 1e-12,
                    double abs_tol = 1e-14, int max_intervals = 4000) {
    // K15 nodes on [0,1] side of the symmetric rule; G7 uses the odd-indexed
    // nodes. Abscissae/weights of the classic 15-point Kronrod extension.
    static const double xk[8] = {
        0.991455371120813, 0.949107912342759, 0.864864423359769,
        0.741531185599394, 0.586087235467691, 0.405845151377397,
        0.207784955007898, 0.000000000000000};
    static const double wk[8] = {
        0.022935322010529, 0.063092092629979, 0.104790010322250,
        0.140653259715525, 0.169004726639267, 0.190350578064785,
        0.204432940075298, 0.209482141084728};
    static const double wg[4] = {
        0.129484966168870, 0.279705391489277, 0.381830050505119,
        0.417959183673469};

    struct Interval {
        double a, b, integral, error;
    };

    auto eval = [&](double lo, double hi) {
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        double ik = 0.0, ig = 0.0;
        for (int i = 0; i < 8; ++i) {
            const double fp = f(c + h * xk[i]);
            const double fm = (i == 7) ? fp : f(c - h * xk[i]);
            const double s = (i == 7) ? fp : fp + fm;
            ik += wk[i] * s;
            if (i % 2 == 1) ig += wg[i / 2] * s;
        }
        ik *= h;
        ig *= h;
        return Interval{lo, hi, ik, std::abs(ik - ig)};
    };

    std::vector<Interval> heap{eval(a, b)};
    auto worse = [](const Interval& p, const Interval& q) {
        return p.error < q.error;
    };
    for (int n = 1; n < max_intervals; ++n) {
        double total = 0.0, err = 0.0;
        for (const auto& iv : heap) {
            total += iv.integral;
            err += iv.error;
        }
        if (err <= std::max(abs_tol, rel_tol * std::abs(total))) {
            return total;
        }
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Interval top = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (top.a + top.b);
        heap.push_back(eval(top.a, mid));
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(eval(mid, top.b));
        std::push_heap(heap.begin(), heap.end(), worse);
    }
    throw ConvergenceError("quadrature failed to reach tolerance");
}

} // namespace casimir
