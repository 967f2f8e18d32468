#include "bsk/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bsk/kernels.hpp"

namespace bsk {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty())
        throw std::invalid_argument("PointSet: at least one point required");
    for (const Point& p : points_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("PointSet: non-finite coordinate");

    // Near-duplicate scan: sort by x, compare while x-distance is within
    // tolerance.  A coincident pair always has |dx| <= kCoincidenceTol.
    std::vector<std::uint32_t> order(points_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return points_[a].x < points_[b].x;
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (points_[order[j]].x - points_[order[i]].x > kCoincidenceTol)
                break;
            if (dist(points_[order[i]], points_[order[j]]) < kCoincidenceTol)
                throw std::invalid_argument("PointSet: coincident points");
        }
    }

    xs_.reserve(points_.size());
    ys_.reserve(points_.size());
    for (const Point& p : points_) {
        xs_.push_back(p.x);
        ys_.push_back(p.y);
    }
}

bool SkeletonGraph::has_edge(std::uint32_t i, std::uint32_t j) const {
    if (i == j)
        return false;
    if (i > j)
        std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<std::vector<std::pair<std::uint32_t, double>>>
SkeletonGraph::adjacency() const {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, lengths[e]);
        adj[edges[e].second].emplace_back(edges[e].first, lengths[e]);
    }
    return adj;
}

SkeletonGraph graph_from_edges(
    const PointSet& ps,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    for (auto& [i, j] : edges) {
        if (i >= ps.size() || j >= ps.size() || i == j)
            throw std::invalid_argument("graph_from_edges: bad edge");
        if (i > j)
            std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    SkeletonGraph g;
    g.n = ps.size();
    g.edges = std::move(edges);
    g.lengths.reserve(g.edges.size());
    for (auto [i, j] : g.edges)
        g.lengths.push_back(dist(ps[i], ps[j]));
    return g;
}

bool edge_in_skeleton(const PointSet& ps, std::size_t i, std::size_t j,
                      double beta, std::size_t k) {
    if (i >= ps.size() || j >= ps.size())
        throw std::out_of_range("edge_in_skeleton: index out of range");
    if (i == j)
        throw std::invalid_argument("edge_in_skeleton: i == j");
    if (k < 1)
        throw std::invalid_argument("edge_in_skeleton: k must be >= 1");
    const double ct = kernels::blocking_cos(beta);
    const std::size_t blockers = kernels::count_blockers(
        ps.xs(), ps.ys(), ps.size(), ps[i], ps[j], ct, k);
    return blockers < k;
}

SkeletonGraph build_k_skeleton(const PointSet& ps, double beta, std::size_t k) {
    if (k < 1)
        throw std::invalid_argument("build_k_skeleton: k must be >= 1");
    const double ct = kernels::blocking_cos(beta);
    const std::size_t n = ps.size();
    SkeletonGraph g;
    g.n = n;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const std::size_t blockers = kernels::count_blockers(
                ps.xs(), ps.ys(), n, ps[i], ps[j], ct, k);
            if (blockers < k) {
                g.edges.emplace_back(i, j);
                g.lengths.push_back(dist(ps[i], ps[j]));
            }
        }
    }
    return g;
}

SkeletonGraph build_skeleton(const PointSet& ps, double beta) {
    return build_k_skeleton(ps, beta, 1);
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

SkeletonGraph euclidean_mst(const PointSet& ps) {
    const std::size_t n = ps.size();
    struct Cand {
        double len;
        std::uint32_t i, j;
    };
    std::vector<Cand> cands;
    cands.reserve(n * (n - 1) / 2);
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            cands.push_back({dist(ps[i], ps[j]), i, j});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return std::tie(a.len, a.i, a.j) < std::tie(b.len, b.i, b.j);
    });
    UnionFind uf(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const Cand& c : cands) {
        if (uf.unite(c.i, c.j)) {
            edges.emplace_back(c.i, c.j);
            if (edges.size() == n - 1)
                break;
        }
    }
    return graph_from_edges(ps, std::move(edges));
}

}  // namespace bsk
