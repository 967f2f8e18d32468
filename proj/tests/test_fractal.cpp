#include <doctest.h>

#include <cmath>

#include "bsk/fractal.hpp"
#include "bsk/skeleton.hpp"

using namespace bsk;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("depth 0 is the bare segment") {
    const FractalPath p = generate_fractal({kPi / 4, 0});
    REQUIRE(p.vertices.size() == 2);
    CHECK(p.vertices[0].x == 0.0);
    CHECK(p.vertices[0].y == 0.0);
    CHECK(p.vertices[1].x == 1.0);
    CHECK(p.vertices[1].y == 0.0);
    CHECK(p.total_length == doctest::Approx(1.0));
}

TEST_CASE("depth 1 template coordinates at theta = pi/4") {
    const FractalPath p = generate_fractal({kPi / 4, 1});
    REQUIRE(p.vertices.size() == 6);
    const double c = std::cos(kPi / 4);
    const double s = 1.0 / (3.0 + std::sqrt(2.0));
    const double ex[] = {0, s, s * (1 + c), s * (2 + c), s * (2 + 2 * c), 1};
    const double ey[] = {0, 0, s * std::sin(kPi / 4), s * std::sin(kPi / 4), 0, 0};
    for (int i = 0; i < 6; ++i) {
        CHECK(p.vertices[i].x == doctest::Approx(ex[i]).epsilon(1e-12));
        CHECK(p.vertices[i].y == doctest::Approx(ey[i]).epsilon(1e-12));
    }
}

TEST_CASE("vertex counts are 5^k + 1") {
    std::size_t pow5 = 1;
    for (int k = 0; k <= 4; ++k) {
        for (const Orientation o : {Orientation::alternating, Orientation::uniform}) {
            const FractalPath p = generate_fractal({kPi / 4, k, o});
            CHECK(p.vertices.size() == pow5 + 1);
        }
        pow5 *= 5;
    }
    CHECK(generate_fractal({0.5, 3}).vertices.size() == 126);
}

TEST_CASE("endpoints pinned at (0,0) and (1,0) at every depth") {
    for (int k = 0; k <= 5; ++k) {
        const FractalPath p = generate_fractal({0.6, k});
        CHECK(p.vertices.front().x == 0.0);
        CHECK(p.vertices.front().y == 0.0);
        CHECK(p.vertices.back().x == 1.0);
        CHECK(p.vertices.back().y == 0.0);
    }
}

TEST_CASE("segments are equal length and sum to l1^k") {
    for (const double theta : {0.3, kPi / 4, 1.2}) {
        const double l1 = fractal_unit_dilation(theta);
        for (int k = 1; k <= 4; ++k) {
            const FractalPath p = generate_fractal({theta, k});
            const double seg0 = dist(p.vertices[0], p.vertices[1]);
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
                const double seg = dist(p.vertices[i], p.vertices[i + 1]);
                CHECK(seg == doctest::Approx(seg0).epsilon(1e-9));
            }
            CHECK(p.total_length ==
                  doctest::Approx(std::pow(l1, k)).epsilon(1e-9));
        }
    }
}

TEST_CASE("fractal_unit_dilation closed form") {
    CHECK(fractal_unit_dilation(0.01) > 1.0);
    CHECK(fractal_unit_dilation(kPi / 3) == doctest::Approx(1.25).epsilon(1e-12));
    const FractalPath p = generate_fractal({kPi / 4, 1});
    CHECK(fractal_unit_dilation(kPi / 4) ==
          doctest::Approx(p.total_length).epsilon(1e-12));
    CHECK_THROWS_AS(fractal_unit_dilation(0.0), std::invalid_argument);
    CHECK_THROWS_AS(fractal_unit_dilation(kPi / 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_fractal({kPi / 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate_fractal({0.5, -1}), std::invalid_argument);
}

TEST_CASE("diamond containment holds recursively") {
    CHECK(verify_diamond_containment(generate_fractal({kPi / 4, 0})));
    for (const Orientation o : {Orientation::alternating, Orientation::uniform}) {
        CHECK(verify_diamond_containment(generate_fractal({kPi / 4, 3, o})));
        CHECK(verify_diamond_containment(generate_fractal({0.2, 4, o})));
        CHECK(verify_diamond_containment(generate_fractal({1.3, 2, o})));
    }
}

TEST_CASE("a displaced vertex breaks diamond containment") {
    FractalPath p = generate_fractal({kPi / 4, 2});
    p.vertices[7].y += 0.1;
    CHECK_FALSE(verify_diamond_containment(p));
}

TEST_CASE("P(pi/4, k) is the Gabriel graph of its vertices") {
    for (int k = 1; k <= 3; ++k)
        CHECK(verify_is_skeleton(generate_fractal({kPi / 4, k}), 1.0));
    CHECK(verify_is_skeleton(generate_fractal({kPi / 4, 0}), 1.0));
}

TEST_CASE("lemma inequality boundary for beta = 1") {
    // theta below (pi - asin(beta)) / 2 = pi/4 keeps the path a skeleton
    for (const double frac : {0.45, 0.49}) {
        const double theta = frac * (kPi / 2);
        for (const Orientation o :
             {Orientation::alternating, Orientation::uniform})
            for (int k = 1; k <= 3; ++k)
                CHECK(verify_is_skeleton(generate_fractal({theta, k, o}), 1.0));
    }
}

TEST_CASE("small-angle path is a 1/sqrt(2)-skeleton") {
    // blocking threshold 3pi/4 requires joint angles pi - theta above it
    const double beta = 1.0 / std::sqrt(2.0);
    CHECK(max_theta_for_beta(beta) == doctest::Approx(kPi / 8).epsilon(1e-12));
    CHECK(verify_is_skeleton(generate_fractal({0.3, 1}), beta));
    CHECK(verify_is_skeleton(generate_fractal({0.3, 2}), beta));
}

TEST_CASE("steep angles stop being skeletons") {
    // at theta > pi/4 the joint angle pi - theta drops below the Gabriel
    // threshold's complement and shortcut edges appear
    CHECK_FALSE(verify_is_skeleton(generate_fractal({1.1, 2}), 1.0));
}
