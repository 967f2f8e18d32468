#include "bsk/fractal.hpp"

#include <cmath>
#include <stdexcept>

#include "bsk/skeleton.hpp"

namespace bsk {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kMaxDepth = 7;  // 5^7 + 1 = 78126 points

// Depth-1 template between (0,0) and (1,0).  The unit-endpoint closure
// 3s + 2s cos(theta) = 1 fixes the segment length s.
std::vector<Point> depth1_template(double theta) {
    const double c = std::cos(theta);
    const double s = 1.0 / (3.0 + 2.0 * c);
    const double h = s * std::sin(theta);
    std::vector<Point> q = {
        {0.0, 0.0},
        {s, 0.0},
        {s * (1.0 + c), h},
        {s * (2.0 + c), h},
        {s * (2.0 + 2.0 * c), 0.0},
        {1.0, 0.0},
    };
    return q;
}

std::vector<Point> build(double theta, int depth, Orientation scheme) {
    if (depth == 0)
        return {{0.0, 0.0}, {1.0, 0.0}};
    const std::vector<Point> q = depth1_template(theta);
    const std::vector<Point> sub = build(theta, depth - 1, scheme);
    std::vector<Point> out;
    out.reserve(5 * (sub.size() - 1) + 1);
    for (int seg = 0; seg < 5; ++seg) {
        const Point p0 = q[seg], p1 = q[seg + 1];
        const double dx = p1.x - p0.x, dy = p1.y - p0.y;
        // Angled copies are flipped under the alternating scheme.
        const bool flip = scheme == Orientation::alternating && (seg % 2 == 1);
        const double sign = flip ? -1.0 : 1.0;
        const std::size_t first = seg == 0 ? 0 : 1;  // joints are shared
        for (std::size_t v = first; v < sub.size(); ++v) {
            const double x = sub[v].x, y = sign * sub[v].y;
            out.push_back({p0.x + x * dx - y * dy, p0.y + x * dy + y * dx});
        }
        // Pin the joint exactly; the affine map only lands near it.
        out.back() = p1;
    }
    return out;
}

}  // namespace

double fractal_unit_dilation(double theta) {
    if (!(theta > 0.0 && theta < kPi / 2))
        throw std::invalid_argument("fractal_unit_dilation: theta out of (0, pi/2)");
    return 5.0 / (3.0 + 2.0 * std::cos(theta));
}

double max_theta_for_beta(double beta) {
    return (kPi - angle_threshold(beta)) / 2;
}

FractalPath generate_fractal(const FractalSpec& spec) {
    if (!(spec.theta > 0.0 && spec.theta < kPi / 2))
        throw std::invalid_argument("generate_fractal: theta out of (0, pi/2)");
    if (spec.depth < 0 || spec.depth > kMaxDepth)
        throw std::invalid_argument("generate_fractal: depth out of range");
    FractalPath path;
    path.spec = spec;
    path.vertices = build(spec.theta, spec.depth, spec.orientation);
    path.unit_length = 1.0 / (3.0 + 2.0 * std::cos(spec.theta));
    path.total_length = 0.0;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
        path.total_length += dist(path.vertices[i], path.vertices[i + 1]);
    return path;
}

namespace {

bool check_diamonds(const std::vector<Point>& v, std::size_t lo,
                    std::size_t hi, std::size_t span, double theta) {
    if (span == 1)
        return true;
    const Diamond d(v[lo], v[hi], theta);
    for (std::size_t i = lo + 1; i < hi; ++i)
        if (!diamond_contains(d, v[i]))
            return false;
    const std::size_t sub = span / 5;
    for (int c = 0; c < 5; ++c)
        if (!check_diamonds(v, lo + c * sub, lo + (c + 1) * sub, sub, theta))
            return false;
    return true;
}

}  // namespace

bool verify_diamond_containment(const FractalPath& path) {
    const std::size_t n = path.vertices.size();
    if (n == 2)
        return true;
    return check_diamonds(path.vertices, 0, n - 1, n - 1, path.spec.theta);
}

bool verify_is_skeleton(const FractalPath& path, double beta) {
    PointSet ps(path.vertices);
    const SkeletonGraph g = build_skeleton(ps, beta);
    if (g.edges.size() != ps.size() - 1)
        return false;
    for (std::uint32_t i = 0; i + 1 < ps.size(); ++i)
        if (!g.has_edge(i, i + 1))
            return false;
    return true;
}

}  // namespace bsk
