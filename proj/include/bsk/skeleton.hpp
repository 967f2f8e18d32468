#ifndef BSK_SKELETON_HPP
#define BSK_SKELETON_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bsk/geom.hpp"

namespace bsk {

// Ordered point collection with stable zero-based indices.  Rejects
// non-finite coordinates and pairs closer than kCoincidenceTol.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    Point operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }

    // Structure-of-arrays views for the kernels.
    const double* xs() const { return xs_.data(); }
    const double* ys() const { return ys_.data(); }

private:
    std::vector<Point> points_;
    std::vector<double> xs_, ys_;
};

struct SkeletonGraph {
    std::size_t n = 0;
    // Unordered pairs stored as i < j, sorted lexicographically.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<double> lengths;

    bool has_edge(std::uint32_t i, std::uint32_t j) const;
    // Per-vertex (neighbor, edge length) lists.
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency() const;
};

// Builds a graph from an explicit edge list, computing lengths.
SkeletonGraph graph_from_edges(
    const PointSet& ps,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

// True iff fewer than k points see segment (ps[i], ps[j]) under an angle
// exceeding the beta threshold.  k = 1 is the plain skeleton membership.
bool edge_in_skeleton(const PointSet& ps, std::size_t i, std::size_t j,
                      double beta, std::size_t k = 1);

// Brute-force reference construction: every pair is tested against every
// possible witness.
SkeletonGraph build_skeleton(const PointSet& ps, double beta);
SkeletonGraph build_k_skeleton(const PointSet& ps, double beta, std::size_t k);

// Euclidean minimum spanning tree of the complete graph; ties broken by
// lexicographic index pair.
SkeletonGraph euclidean_mst(const PointSet& ps);

}  // namespace bsk

#endif
