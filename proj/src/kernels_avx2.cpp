#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "bsk/kernels.hpp"

namespace bsk::kernels {

std::size_t count_blockers_avx2(const double* xs, const double* ys,
                                std::size_t n, Point a, Point b,
                                double cos_thr, std::size_t stop_at) {
    constexpr double skip_sq = kCoincidenceTol * kCoincidenceTol;
    const __m256d ax = _mm256_set1_pd(a.x), ay = _mm256_set1_pd(a.y);
    const __m256d bx = _mm256_set1_pd(b.x), by = _mm256_set1_pd(b.y);
    const __m256d ct = _mm256_set1_pd(cos_thr);
    const __m256d skip = _mm256_set1_pd(skip_sq);

    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d px = _mm256_loadu_pd(xs + i);
        const __m256d py = _mm256_loadu_pd(ys + i);
        const __m256d ux = _mm256_sub_pd(ax, px);
        const __m256d uy = _mm256_sub_pd(ay, py);
        const __m256d vx = _mm256_sub_pd(bx, px);
        const __m256d vy = _mm256_sub_pd(by, py);
        const __m256d nu =
            _mm256_add_pd(_mm256_mul_pd(ux, ux), _mm256_mul_pd(uy, uy));
        const __m256d nv =
            _mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy));
        const __m256d dot =
            _mm256_add_pd(_mm256_mul_pd(ux, vx), _mm256_mul_pd(uy, vy));
        const __m256d rhs = _mm256_mul_pd(ct, _mm256_sqrt_pd(_mm256_mul_pd(nu, nv)));
        __m256d blocked = _mm256_cmp_pd(dot, rhs, _CMP_LT_OQ);
        const __m256d keep =
            _mm256_and_pd(_mm256_cmp_pd(nu, skip, _CMP_GE_OQ),
                          _mm256_cmp_pd(nv, skip, _CMP_GE_OQ));
        blocked = _mm256_and_pd(blocked, keep);
        count += static_cast<std::size_t>(
            __builtin_popcount(_mm256_movemask_pd(blocked)));
        if (count >= stop_at)
            return stop_at;
    }
    if (i < n) {
        const std::size_t tail =
            count_blockers_scalar(xs + i, ys + i, n - i, a, b, cos_thr,
                                  stop_at - count);
        count += tail;
        if (count >= stop_at)
            return stop_at;
    }
    return count;
}

}  // namespace bsk::kernels

#endif
