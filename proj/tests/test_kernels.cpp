#include <doctest.h>

#include <cstring>
#include <string>

#include "bsk/kernels.hpp"
#include "test_util.hpp"

using namespace bsk;
using bsk_test::random_points;

namespace {

// Independent route through the atan2 angle formulation.
std::size_t count_by_angle(const std::vector<Point>& pts, Point a, Point b,
                           double beta, std::size_t stop_at) {
    const double thr = angle_threshold(beta) + kAngleTol;
    std::size_t count = 0;
    for (const Point& p : pts) {
        if (dist(p, a) < kCoincidenceTol || dist(p, b) < kCoincidenceTol)
            continue;
        if (angle_at(p, a, b) > thr) {
            if (++count >= stop_at)
                return count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("dispatch reports a known kernel") {
    const std::string name = kernels::active_kernel();
    CHECK((name == "scalar" || name == "avx2"));
}

TEST_CASE("scalar kernel agrees with the angle formulation") {
    std::mt19937_64 rng(711);
    for (int iter = 0; iter < 50; ++iter) {
        const auto pts = random_points(rng, 40);
        std::vector<double> xs, ys;
        for (const Point& p : pts) {
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
        for (const double beta : {0.5, 1.0, 1.5}) {
            const double ct = kernels::blocking_cos(beta);
            const Point a = pts[iter % pts.size()];
            const Point b = pts[(iter + 7) % pts.size()];
            if (dist(a, b) < 1e-6)
                continue;
            const std::size_t got = kernels::count_blockers_scalar(
                xs.data(), ys.data(), pts.size(), a, b, ct, pts.size());
            CHECK(got == count_by_angle(pts, a, b, beta, pts.size()));
        }
    }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernel matches the scalar reference exactly") {
    if (!__builtin_cpu_supports("avx2"))
        return;
    std::mt19937_64 rng(722);
    for (const std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 33u, 100u, 257u}) {
        const auto pts = random_points(rng, n);
        std::vector<double> xs, ys;
        for (const Point& p : pts) {
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
        for (const double beta : {0.3, 0.5, 1.0, 1.5, 2.0}) {
            const double ct = kernels::blocking_cos(beta);
            for (int rep = 0; rep < 8; ++rep) {
                const Point a = pts[rng() % n];
                const Point b = pts[rng() % n];
                if (dist(a, b) < 1e-9)
                    continue;
                for (const std::size_t stop :
                     {std::size_t{1}, std::size_t{3}, n}) {
                    const std::size_t s = kernels::count_blockers_scalar(
                        xs.data(), ys.data(), n, a, b, ct, stop);
                    const std::size_t v = kernels::count_blockers_avx2(
                        xs.data(), ys.data(), n, a, b, ct, stop);
                    CHECK(s == v);
                }
            }
        }
    }
}
#endif

TEST_CASE("stop_at saturates the count") {
    // Collinear points: everything strictly between the endpoints blocks.
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        xs.push_back(i);
        ys.push_back(0.0);
    }
    const double ct = kernels::blocking_cos(1.0);
    const Point a{0, 0}, b{19, 0};
    CHECK(kernels::count_blockers(xs.data(), ys.data(), 20, a, b, ct, 100) == 18);
    CHECK(kernels::count_blockers(xs.data(), ys.data(), 20, a, b, ct, 5) == 5);
    CHECK(kernels::count_blockers(xs.data(), ys.data(), 20, a, b, ct, 1) == 1);
}

TEST_CASE("kernel skips the segment endpoints") {
    std::vector<double> xs = {0.0, 2.0, 1.0};
    std::vector<double> ys = {0.0, 0.0, 0.2};
    const double ct = kernels::blocking_cos(1.0);
    // only the third point can block; the endpoints are in the arrays
    CHECK(kernels::count_blockers(xs.data(), ys.data(), 3, {0, 0}, {2, 0}, ct,
                                  10) == 1);
}
