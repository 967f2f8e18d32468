#include "bsk/dilation.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace bsk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> dijkstra(
    const std::vector<std::vector<std::pair<std::uint32_t, double>>>& adj,
    std::uint32_t source) {
    std::vector<double> d(adj.size(), kInf);
    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[source] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        const auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u])
            continue;
        for (const auto& [v, w] : adj[u]) {
            if (du + w < d[v]) {
                d[v] = du + w;
                pq.emplace(d[v], v);
            }
        }
    }
    return d;
}

}  // namespace

std::vector<double> shortest_paths_from(const SkeletonGraph& g,
                                        std::uint32_t source) {
    if (source >= g.n)
        throw std::out_of_range("shortest_paths_from: bad source");
    return dijkstra(g.adjacency(), source);
}

std::optional<double> pair_dilation(const SkeletonGraph& g, const PointSet& ps,
                                    std::uint32_t s, std::uint32_t t) {
    if (s >= g.n || t >= g.n)
        throw std::out_of_range("pair_dilation: index out of range");
    if (s == t)
        throw std::invalid_argument("pair_dilation: s == t");
    const std::vector<double> d = shortest_paths_from(g, s);
    if (d[t] == kInf)
        return std::nullopt;
    return d[t] / dist(ps[s], ps[t]);
}

DilationReport graph_dilation(const SkeletonGraph& g, const PointSet& ps,
                              bool keep_matrix) {
    if (ps.size() < 2)
        throw std::invalid_argument("graph_dilation: need at least 2 points");
    const auto adj = g.adjacency();
    DilationReport report;
    report.max_dilation = 0.0;
    report.witness_pair = {0, 1};
    if (keep_matrix) {
        report.per_pair_available = true;
        report.per_pair.assign(g.n * g.n, 1.0);
    }
    for (std::uint32_t s = 0; s < g.n; ++s) {
        const std::vector<double> d = dijkstra(adj, s);
        for (std::uint32_t t = 0; t < g.n; ++t) {
            if (t == s)
                continue;
            const double dil =
                d[t] == kInf ? kInf : d[t] / dist(ps[s], ps[t]);
            if (keep_matrix)
                report.per_pair[s * g.n + t] = dil;
            if (d[t] == kInf) {
                report.disconnected = true;
                continue;
            }
            if (s < t && dil > report.max_dilation) {
                report.max_dilation = dil;
                report.witness_pair = {s, t};
            }
        }
    }
    return report;
}

}  // namespace bsk
