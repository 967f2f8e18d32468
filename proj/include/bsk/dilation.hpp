#ifndef BSK_DILATION_HPP
#define BSK_DILATION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bsk/skeleton.hpp"

namespace bsk {

struct DilationReport {
    double max_dilation = 1.0;
    std::pair<std::uint32_t, std::uint32_t> witness_pair{0, 0};
    bool disconnected = false;  // some pair was unreachable
    bool per_pair_available = false;
    // Row-major n*n dilation matrix when retained; unreachable pairs hold
    // infinity, the diagonal holds 1.
    std::vector<double> per_pair;
};

// Shortest-path distances from a single source over Euclidean edge weights.
// Unreachable vertices hold infinity.
std::vector<double> shortest_paths_from(const SkeletonGraph& g,
                                        std::uint32_t source);

// Graph shortest-path length divided by Euclidean distance; nullopt when
// the pair is disconnected.
std::optional<double> pair_dilation(const SkeletonGraph& g, const PointSet& ps,
                                    std::uint32_t s, std::uint32_t t);

// Maximum pair dilation with its witness, via single-source sweeps from
// every vertex.  Witness ties break to the lexicographically smallest pair.
DilationReport graph_dilation(const SkeletonGraph& g, const PointSet& ps,
                              bool keep_matrix = false);

}  // namespace bsk

#endif
