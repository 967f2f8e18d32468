#ifndef BSK_FRACTAL_HPP
#define BSK_FRACTAL_HPP

#include <vector>

#include "bsk/geom.hpp"

namespace bsk {

enum class Orientation {
    alternating,  // angled copies flipped, as in the usual drawing
    uniform,      // all copies in the parent's orientation
};

struct FractalSpec {
    double theta;  // construction angle, in (0, pi/2)
    int depth;     // recursion depth k >= 0
    Orientation orientation = Orientation::alternating;
};

// Recursive five-segment path between (0,0) and (1,0): each segment of the
// depth-1 template (headings 0, +theta, 0, -theta, 0) is replaced by a
// scaled copy of the depth-(k-1) path.  5^depth + 1 vertices.
struct FractalPath {
    FractalSpec spec;
    std::vector<Point> vertices;
    double unit_length;   // single segment length at full depth
    double total_length;  // sum of all segment lengths
};

FractalPath generate_fractal(const FractalSpec& spec);

// Length of the depth-1 path between unit-distance endpoints,
// 5 / (3 + 2 cos theta).  Endpoint dilation per depth is a power of this.
double fractal_unit_dilation(double theta);

// Largest construction angle for which the path is provably the
// beta-skeleton of its vertices: (pi - angle_threshold(beta)) / 2.
double max_theta_for_beta(double beta);

// Checks that every vertex lies in the closed diamond spanned by the path
// endpoints with corner angle theta, recursively at every one of the five
// sub-paths of each level.
bool verify_diamond_containment(const FractalPath& path);

// True iff the brute-force beta-skeleton of the vertices is exactly the
// consecutive-pair path.
bool verify_is_skeleton(const FractalPath& path, double beta);

}  // namespace bsk

#endif
