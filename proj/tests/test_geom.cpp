#include <doctest.h>

#include <cmath>

#include "bsk/geom.hpp"
#include "test_util.hpp"

using namespace bsk;
using bsk_test::random_point;
using bsk_test::uniform;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("angle_at basic values") {
    CHECK(angle_at({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(angle_at({0, 0}, {1, 0}, {-1, 0}) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(angle_at({0, 0}, {1, 0}, {1, 1}) == doctest::Approx(kPi / 4).epsilon(1e-12));
}

TEST_CASE("angle_at rejects degenerate apex") {
    CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(angle_at({1, 1}, {0, 0}, {1, 1 + 1e-13}), std::invalid_argument);
}

TEST_CASE("angle_at is symmetric in a and b") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        const Point apex = random_point(rng), a = random_point(rng),
                    b = random_point(rng);
        if (dist(apex, a) < 1e-6 || dist(apex, b) < 1e-6)
            continue;
        CHECK(angle_at(apex, a, b) == angle_at(apex, b, a));
    }
}

TEST_CASE("angle_threshold across the beta ranges") {
    CHECK(angle_threshold(1.0) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(angle_threshold(2.0) == doctest::Approx(kPi / 6).epsilon(1e-12));
    CHECK(angle_threshold(1.0 / std::sqrt(2.0)) ==
          doctest::Approx(3 * kPi / 4).epsilon(1e-12));
    // continuous at beta = 1
    CHECK(std::fabs(angle_threshold(1.0 - 1e-12) - kPi / 2) < 1e-5);
    CHECK(std::fabs(angle_threshold(1.0 + 1e-12) - kPi / 2) < 1e-5);
    CHECK_THROWS_AS(angle_threshold(0.0), std::invalid_argument);
    CHECK_THROWS_AS(angle_threshold(-1.0), std::invalid_argument);
}

TEST_CASE("region_contains basic membership") {
    CHECK(region_contains({0, 0}, {2, 0}, 1.0, {1, 0.5}));
    CHECK_FALSE(region_contains({0, 0}, {2, 0}, 1.0, {1, 1.5}));
    CHECK(region_contains({0, 0}, {2, 0}, 1.0 / std::sqrt(2.0), {1, 0}));
    CHECK_THROWS_AS(region_contains({0, 0}, {0, 0}, 1.0, {1, 1}),
                    std::invalid_argument);
}

TEST_CASE("region membership agrees with the angle criterion") {
    const double betas[] = {0.25, 0.5, 1.0 / std::sqrt(2.0), 1.0,
                            std::sqrt(2.0), 2.0};
    std::mt19937_64 rng(202);
    for (const double beta : betas) {
        const double thr = angle_threshold(beta);
        int checked = 0;
        while (checked < 1000) {
            const Point a = random_point(rng), b = random_point(rng),
                        p = random_point(rng);
            if (dist(a, b) < 1e-3 || dist(p, a) < 1e-3 || dist(p, b) < 1e-3)
                continue;
            const double ang = angle_at(p, a, b);
            if (std::fabs(ang - thr) < 1e-6)
                continue;  // too close to the region boundary
            ++checked;
            CHECK(region_contains(a, b, beta, p) == (ang > thr));
        }
    }
}

TEST_CASE("region symmetry in segment endpoints") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 300; ++i) {
        const Point a = random_point(rng), b = random_point(rng),
                    p = random_point(rng);
        if (dist(a, b) < 1e-3 || dist(p, a) < 1e-3 || dist(p, b) < 1e-3)
            continue;
        for (const double beta : {0.5, 1.0, 2.0})
            CHECK(region_contains(a, b, beta, p) ==
                  region_contains(b, a, beta, p));
    }
}

TEST_CASE("lens shrinks as beta decreases") {
    std::mt19937_64 rng(404);
    const double betas[] = {0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < 500; ++i) {
        const Point a = random_point(rng), b = random_point(rng),
                    p = random_point(rng);
        if (dist(a, b) < 1e-3 || dist(p, a) < 1e-3 || dist(p, b) < 1e-3)
            continue;
        for (std::size_t k = 0; k + 1 < std::size(betas); ++k) {
            if (region_contains(a, b, betas[k], p))
                CHECK(region_contains(a, b, betas[k + 1], p));
        }
    }
}

TEST_CASE("similarity invariance of angle and membership") {
    std::mt19937_64 rng(505);
    for (int i = 0; i < 200; ++i) {
        const Point a = random_point(rng), b = random_point(rng),
                    p = random_point(rng);
        if (dist(a, b) < 1e-3 || dist(p, a) < 1e-3 || dist(p, b) < 1e-3)
            continue;
        const double phi = uniform(rng, 0, 2 * kPi);
        const double scale = uniform(rng, 0.5, 3.0);
        const double tx = uniform(rng, -5, 5), ty = uniform(rng, -5, 5);
        auto map = [&](Point q) {
            return Point{scale * (q.x * std::cos(phi) - q.y * std::sin(phi)) + tx,
                         scale * (q.x * std::sin(phi) + q.y * std::cos(phi)) + ty};
        };
        const Point a2 = map(a), b2 = map(b), p2 = map(p);
        CHECK(angle_at(p, a, b) ==
              doctest::Approx(angle_at(p2, a2, b2)).epsilon(1e-9));
        const double thr = angle_threshold(1.0);
        if (std::fabs(angle_at(p, a, b) - thr) > 1e-6)
            CHECK(region_contains(a, b, 1.0, p) ==
                  region_contains(a2, b2, 1.0, p2));
    }
}

TEST_CASE("diamond containment") {
    const Diamond d({0, 0}, {1, 0}, kPi / 2);
    CHECK(diamond_contains(d, {0.5, 0}));
    CHECK(diamond_contains(d, {0, 0}));
    CHECK(diamond_contains(d, {1, 0}));
    // apex of the pi/2-corner diamond on a unit diagonal sits at height
    // tan(pi/4) * 0.5 = 0.5
    CHECK(diamond_contains(d, {0.5, 0.26}));
    CHECK(diamond_contains(d, {0.5, 0.4999999}));
    CHECK_FALSE(diamond_contains(d, {0.5, 0.51}));
    CHECK_FALSE(diamond_contains(d, {0.5, -0.51}));
    CHECK_FALSE(diamond_contains(d, {1.1, 0}));
    CHECK_FALSE(diamond_contains(d, {-0.1, 0}));
    // on the edge counts as contained
    CHECK(diamond_contains(d, {0.25, 0.25}));

    CHECK_THROWS_AS(Diamond({0, 0}, {0, 0}, kPi / 2), std::invalid_argument);
    CHECK_THROWS_AS(Diamond({0, 0}, {1, 0}, 0.0), std::invalid_argument);
}

TEST_CASE("diamond half-plane oracle on random points") {
    // Independent route: explicit intersection of the four half-planes.
    std::mt19937_64 rng(606);
    const double apex = uniform(rng, 0.3, 2.5);
    const Diamond d({0, 0}, {1, 0}, apex);
    const double half = std::tan(apex / 2);
    auto oracle = [&](Point p) {
        const double s = p.x, t = p.y;
        if (s < 0 || s > 1)
            return false;
        return std::fabs(t) <= half * std::min(s, 1 - s);
    };
    for (int i = 0; i < 1000; ++i) {
        const Point p{uniform(rng, -0.5, 1.5), uniform(rng, -1.5, 1.5)};
        // skip the measure-zero boundary neighbourhood
        if (std::fabs(std::fabs(p.y) - half * std::min(p.x, 1 - p.x)) < 1e-6)
            continue;
        if (std::fabs(p.x) < 1e-6 || std::fabs(p.x - 1) < 1e-6)
            continue;
        CHECK(diamond_contains(d, p) == oracle(p));
    }
}
