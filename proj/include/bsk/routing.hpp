#ifndef BSK_ROUTING_HPP
#define BSK_ROUTING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bsk/dilation.hpp"
#include "bsk/skeleton.hpp"

namespace bsk {

// One witness triangle of the greedy recursion: hypotenuse (a, b), apex r.
// Child links refer to the sub-triangles built for sides (a, r) and (r, b);
// kNoChild marks a side that is a skeleton edge, kDetached a side whose
// subtree was pruned away.
struct TriangleNode {
    std::uint32_t a = 0, r = 0, b = 0;
    int left = -1, right = -1, parent = -1;
    bool removed = false;
};

inline constexpr int kNoChild = -1;
inline constexpr int kDetached = -2;

struct TriangleTree {
    std::uint32_t s = 0, t = 0;
    int root = -1;  // -1: empty tree (edge st exists)
    std::vector<TriangleNode> nodes;
};

struct RouteResult {
    std::vector<std::uint32_t> path;
    double length = 0.0;
    TriangleTree tree;
    double boundary_length = 0.0;
};

// Greedy recursion: take edge st if present, otherwise split at the
// witness r seeing st under the largest angle and recurse on both halves.
// Requires beta <= 1 (obtuse witnesses shrink both halves, so the
// recursion terminates).  g must be the beta-skeleton of ps.
RouteResult greedy_route(const SkeletonGraph& g, const PointSet& ps,
                         double beta, std::uint32_t s, std::uint32_t t);

// |T| = dist(s,t) + sum over live triangles of (perimeter - 2 hypotenuse);
// equals the greedy path length for unpruned trees.
double boundary_length(const TriangleTree& tree, std::span<const Point> pts);

// In-order node indices of the live leaf triangles.
std::vector<int> leaf_nodes_in_order(const TriangleTree& tree);
std::size_t leaf_count(const TriangleTree& tree);

// s-to-t walk read off an unpruned tree (every child-less side is an edge).
std::vector<std::uint32_t> walk_from_tree(const TriangleTree& tree);

struct PruneResult {
    TriangleTree tree;
    std::vector<std::uint32_t> walk;
};

// While some vertex shows up three or more times as a leaf vertex, drop
// the subtrees hanging between its first and last leaf appearances and
// splice the walk between them.  Afterwards every vertex appears at most
// twice as a leaf vertex, and the walk length stays bounded by |T|.
PruneResult prune_tree(const TriangleTree& tree, std::span<const Point> pts);

// Supremum of |T| over unit-hypotenuse one-leaf trees whose triangles all
// have apex angle >= theta > pi/2; attained in the limit by the
// logarithmic spiral.
double single_leaf_bound(double theta);

// (-1/cos theta)^(1 + floor(log2 leaf_count)).
double tree_length_bound(double theta, std::uint64_t leaf_count);

// Worst-case route stretch on an n-point beta-skeleton: the spiral bound
// with 2n leaves for beta < sqrt(3)/2, the MST fallback n-1 otherwise.
double dilation_upper_bound(std::uint64_t n, double beta);

struct BoundExponents {
    double upper_c;  // -1/2 log2(1 - beta^2)
    double lower_c;  // log5 of the depth-1 fractal length
};

BoundExponents bound_exponents(double beta, double theta);
double upper_exponent(double beta);
double lower_exponent(double theta);

}  // namespace bsk

#endif
