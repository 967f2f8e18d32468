#include "bsk/kernels.hpp"

#include <cmath>

namespace bsk::kernels {

double blocking_cos(double beta) {
    return std::cos(angle_threshold(beta) + kAngleTol);
}

std::size_t count_blockers_scalar(const double* xs, const double* ys,
                                  std::size_t n, Point a, Point b,
                                  double cos_thr, std::size_t stop_at) {
    constexpr double skip_sq = kCoincidenceTol * kCoincidenceTol;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ux = a.x - xs[i], uy = a.y - ys[i];
        const double vx = b.x - xs[i], vy = b.y - ys[i];
        const double nu = ux * ux + uy * uy;
        const double nv = vx * vx + vy * vy;
        if (nu < skip_sq || nv < skip_sq)
            continue;
        const double dot = ux * vx + uy * vy;
        if (dot < cos_thr * std::sqrt(nu * nv)) {
            if (++count >= stop_at)
                return count;
        }
    }
    return count;
}

namespace {

CountBlockersFn pick_kernel() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return &count_blockers_avx2;
#endif
    return &count_blockers_scalar;
}

const CountBlockersFn g_kernel = pick_kernel();

}  // namespace

std::size_t count_blockers(const double* xs, const double* ys, std::size_t n,
                           Point a, Point b, double cos_thr,
                           std::size_t stop_at) {
    return g_kernel(xs, ys, n, a, b, cos_thr, stop_at);
}

const char* active_kernel() {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_kernel == &count_blockers_avx2)
        return "avx2";
#endif
    return "scalar";
}

}  // namespace bsk::kernels
