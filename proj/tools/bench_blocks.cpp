// Serial reference vs OpenMP block kernels: wall time and agreement.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "casimir/analysis.hpp"
#include "casimir/spectral.hpp"

using namespace casimir;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main() {
    const Material gold{"Au", 8.55, 0.0126};
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%-34s %12s %12s %8s\n", "workload", "serial ms", "openmp ms",
                "speedup");

    for (const int L : {20, 40, 80}) {
        const double x = x_from_gap_ratio(0.5);
        const int reps = L >= 80 ? 3 : 10;
        volatile double sink = 0.0;
        const double serial =
            time_ms([&] { sink = ref::zero_point_energy(x, -1.0, L); }, reps);
        const double serial_value = ref::zero_point_energy(x, -1.0, L);
        const double parallel =
            time_ms([&] { sink = zero_point_energy(x, -1.0, L); }, reps);
        const double parallel_value = zero_point_energy(x, -1.0, L);
        char name[64];
        std::snprintf(name, sizeof(name), "energy z/a=0.5 L=%d", L);
        std::printf("%-34s %12.3f %12.3f %7.2fx\n", name, serial, parallel,
                    serial / parallel);
        if (parallel_value != serial_value) {
            std::printf("MISMATCH: serial %.17g vs parallel %.17g\n",
                        serial_value, parallel_value);
            return 1;
        }
        (void)sink;
    }

    {
        const int L = 16;
        const auto grid = log_grid(0.2, 8.0, 24);
        volatile double sink = 0.0;
        const double serial = time_ms(
            [&] {
                double acc = 0.0;
                for (const double t : grid) {
                    acc += ref::zero_point_energy(x_from_gap_ratio(t), -1.0, L);
                }
                sink = acc;
            },
            5);
        std::vector<double> e(grid.size());
        const double parallel = time_ms(
            [&] {
#pragma omp parallel for schedule(dynamic)
                for (std::ptrdiff_t i = 0;
                     i < static_cast<std::ptrdiff_t>(grid.size()); ++i) {
                    e[i] = zero_point_energy(x_from_gap_ratio(grid[i]), -1.0, L);
                }
                sink = e.back();
            },
            5);
        std::printf("%-34s %12.3f %12.3f %7.2fx\n",
                    "24-point energy grid L=16", serial, parallel,
                    serial / parallel);
        (void)sink;
    }

    {
        const int L = 12;
        volatile double sink = 0.0;
        const double serial = time_ms(
            [&] { sink = ref::dissimilar_energy(gold, gold, 1.0, L); }, 5);
        const double parallel =
            time_ms([&] { sink = dissimilar_energy(gold, gold, 1.0, L); }, 5);
        std::printf("%-34s %12.3f %12.3f %7.2fx\n",
                    "self-consistent energy z/a=1 L=12", serial, parallel,
                    serial / parallel);
        (void)sink;
    }
    return 0;
}
