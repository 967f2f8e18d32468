#ifndef BSK_KERNELS_HPP
#define BSK_KERNELS_HPP

#include <cstddef>

#include "bsk/geom.hpp"

namespace bsk::kernels {

// Counts points c among (xs[i], ys[i]) that block edge ab, i.e. see ab
// under an angle exceeding the threshold encoded by cos_thr:
//
//     dot(a-c, b-c) < cos_thr * |a-c| * |b-c|
//
// cos is strictly decreasing on [0, pi], so this is the angle criterion
// without the atan2.  Points within kCoincidenceTol of a or b are skipped
// (the endpoints themselves live in the arrays).  Scanning stops once
// stop_at blockers are found; the returned count saturates there.
//
// The scalar kernel is the reference; the AVX2 variant performs the same
// operations per lane (no FMA contraction) so counts agree exactly.
using CountBlockersFn = std::size_t (*)(const double* xs, const double* ys,
                                        std::size_t n, Point a, Point b,
                                        double cos_thr, std::size_t stop_at);

std::size_t count_blockers_scalar(const double* xs, const double* ys,
                                  std::size_t n, Point a, Point b,
                                  double cos_thr, std::size_t stop_at);

#if defined(__x86_64__) || defined(_M_X64)
std::size_t count_blockers_avx2(const double* xs, const double* ys,
                                std::size_t n, Point a, Point b,
                                double cos_thr, std::size_t stop_at);
#endif

// Dispatched entry point; picks the widest variant the CPU supports.
std::size_t count_blockers(const double* xs, const double* ys, std::size_t n,
                           Point a, Point b, double cos_thr,
                           std::size_t stop_at);

// Name of the variant count_blockers dispatches to ("scalar" or "avx2").
const char* active_kernel();

// cos(angle_threshold(beta) + kAngleTol): the comparison constant for the
// strict blocking test with its tolerance folded in.
double blocking_cos(double beta);

}  // namespace bsk::kernels

#endif
