#ifndef BSK_GEOM_HPP
#define BSK_GEOM_HPP

#include <cmath>
#include <stdexcept>

namespace bsk {

// Absolute distance below which two points are treated as coincident.
inline constexpr double kCoincidenceTol = 1e-12;
// Absolute tolerance for angle comparisons, in radians.
inline constexpr double kAngleTol = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point make_point(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("point coordinates must be finite");
    return Point{x, y};
}

inline double dist(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double dist_sq(Point a, Point b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Exclusion-angle threshold for a given beta: a third point blocks an edge
// ab exactly when it sees ab under an angle exceeding this value.
struct AngleParams {
    double beta;
    double theta_threshold;

    explicit AngleParams(double beta_);
};

double angle_threshold(double beta);

// Interior angle at `apex` subtended by a and b, in [0, pi].
// Uses atan2(|cross|, dot); stable near 0 and pi where the
// arccos formulation loses the discriminating bits.
double angle_at(Point apex, Point a, Point b);

// Open empty region of edge ab for parameter beta:
//   beta > 1  union of two circles with ab as chord, diameter beta*d(a,b)
//   beta = 1  open disk with ab as diameter
//   beta < 1  lens: intersection of two circles, diameter d(a,b)/beta
// Strict membership; points on the boundary are outside.
bool region_contains(Point a, Point b, double beta, Point p);

// Convex quadrilateral symmetric about segment ab with interior angle
// apex_angle at both a and b.
struct Diamond {
    Point endpoint_a;
    Point endpoint_b;
    double apex_angle;

    Diamond(Point a, Point b, double apex);
};

// Closed containment (boundary counts), with a small relative slack so
// vertices constructed to lie exactly on an edge still test inside.
bool diamond_contains(const Diamond& d, Point p);

}  // namespace bsk

#endif
