#include "bsk/geom.hpp"

#include <cmath>

namespace bsk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double angle_threshold(double beta) {
    if (!(beta > 0.0))
        throw std::invalid_argument("angle_threshold: beta must be positive");
    if (beta > 1.0)
        return std::asin(1.0 / beta);
    return kPi - std::asin(beta);
}

AngleParams::AngleParams(double beta_)
    : beta(beta_), theta_threshold(angle_threshold(beta_)) {}

double angle_at(Point apex, Point a, Point b) {
    const double ux = a.x - apex.x, uy = a.y - apex.y;
    const double vx = b.x - apex.x, vy = b.y - apex.y;
    if (ux * ux + uy * uy < kCoincidenceTol * kCoincidenceTol ||
        vx * vx + vy * vy < kCoincidenceTol * kCoincidenceTol)
        throw std::invalid_argument("angle_at: apex coincides with an endpoint");
    const double cross = ux * vy - uy * vx;
    const double dot = ux * vx + uy * vy;
    return std::atan2(std::fabs(cross), dot);
}

bool region_contains(Point a, Point b, double beta, Point p) {
    if (!(beta > 0.0))
        throw std::invalid_argument("region_contains: beta must be positive");
    const double d = dist(a, b);
    if (d < kCoincidenceTol)
        throw std::invalid_argument("region_contains: degenerate segment");

    const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    if (beta == 1.0)
        return dist(p, mid) < d / 2;

    // Circle pair with ab as common chord.  Centers sit on the
    // perpendicular bisector at offset h from the midpoint.
    const double diam = (beta > 1.0) ? beta * d : d / beta;
    const double r = diam / 2;
    const double h = std::sqrt(std::max(0.0, r * r - d * d / 4));
    const double nx = -(b.y - a.y) / d, ny = (b.x - a.x) / d;
    const Point c1{mid.x + h * nx, mid.y + h * ny};
    const Point c2{mid.x - h * nx, mid.y - h * ny};
    const bool in1 = dist(p, c1) < r;
    const bool in2 = dist(p, c2) < r;
    return (beta > 1.0) ? (in1 || in2) : (in1 && in2);
}

Diamond::Diamond(Point a, Point b, double apex)
    : endpoint_a(a), endpoint_b(b), apex_angle(apex) {
    if (dist(a, b) < kCoincidenceTol)
        throw std::invalid_argument("Diamond: coincident endpoints");
    if (!(apex > 0.0 && apex < kPi))
        throw std::invalid_argument("Diamond: apex angle out of (0, pi)");
}

bool diamond_contains(const Diamond& d, Point p) {
    const Point a = d.endpoint_a, b = d.endpoint_b;
    const double len = dist(a, b);
    const double ux = (b.x - a.x) / len, uy = (b.y - a.y) / len;
    // Local coordinates: s along ab, t perpendicular.
    const double s = (p.x - a.x) * ux + (p.y - a.y) * uy;
    const double t = -(p.x - a.x) * uy + (p.y - a.y) * ux;
    const double slack = 1e-9 * len;
    if (s < -slack || s > len + slack)
        return false;
    // Edges leave each corner at apex_angle/2 from the diagonal.
    const double half = std::tan(d.apex_angle / 2);
    const double height = half * std::min(s, len - s);
    return std::fabs(t) <= height + slack;
}

}  // namespace bsk
