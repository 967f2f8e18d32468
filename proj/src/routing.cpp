#include "bsk/routing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "bsk/fractal.hpp"

namespace bsk {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct GreedyBuilder {
    const SkeletonGraph& g;
    const PointSet& ps;
    double min_angle;  // acceptance floor for the witness
    TriangleTree tree;
    std::vector<std::uint32_t> path;

    std::uint32_t pick_witness(std::uint32_t s, std::uint32_t t) const {
        double best = -1.0;
        std::uint32_t best_r = s;
        for (std::uint32_t r = 0; r < ps.size(); ++r) {
            if (r == s || r == t)
                continue;
            if (dist(ps[r], ps[s]) < kCoincidenceTol ||
                dist(ps[r], ps[t]) < kCoincidenceTol)
                continue;
            const double ang = angle_at(ps[r], ps[s], ps[t]);
            if (ang > best) {  // strict: ties keep the lowest index
                best = ang;
                best_r = r;
            }
        }
        if (best < min_angle)
            throw std::domain_error(
                "greedy_route: no obtuse witness; graph is not the "
                "beta-skeleton of the point set");
        return best_r;
    }

    // Appends vertices after s, ending with t; returns the node index of
    // the triangle built for (s, t), or kNoChild when edge st exists.
    int route(std::uint32_t s, std::uint32_t t) {
        if (g.has_edge(s, t)) {
            path.push_back(t);
            return kNoChild;
        }
        const std::uint32_t r = pick_witness(s, t);
        const double dst = dist(ps[s], ps[t]);
        if (!(dist(ps[s], ps[r]) < dst && dist(ps[r], ps[t]) < dst))
            throw std::logic_error(
                "greedy_route: witness does not shrink the segment");
        const int idx = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(TriangleNode{s, r, t});
        const int left = route(s, r);
        const int right = route(r, t);
        tree.nodes[idx].left = left;
        tree.nodes[idx].right = right;
        if (left != kNoChild)
            tree.nodes[left].parent = idx;
        if (right != kNoChild)
            tree.nodes[right].parent = idx;
        return idx;
    }
};

}  // namespace

RouteResult greedy_route(const SkeletonGraph& g, const PointSet& ps,
                         double beta, std::uint32_t s, std::uint32_t t) {
    if (!(beta > 0.0))
        throw std::invalid_argument("greedy_route: beta must be positive");
    if (beta > 1.0)
        throw std::invalid_argument(
            "greedy_route: beta > 1 is unsupported (termination requires "
            "obtuse witnesses)");
    if (s >= ps.size() || t >= ps.size())
        throw std::out_of_range("greedy_route: index out of range");
    if (s == t)
        throw std::invalid_argument("greedy_route: s == t");

    GreedyBuilder builder{g, ps, angle_threshold(beta) - kAngleTol, {}, {}};
    builder.tree.s = s;
    builder.tree.t = t;
    builder.path.push_back(s);
    builder.tree.root = builder.route(s, t);

    RouteResult result;
    result.path = std::move(builder.path);
    result.tree = std::move(builder.tree);
    result.length = 0.0;
    for (std::size_t i = 0; i + 1 < result.path.size(); ++i)
        result.length += dist(ps[result.path[i]], ps[result.path[i + 1]]);
    result.boundary_length = boundary_length(result.tree, ps.points());
    return result;
}

double boundary_length(const TriangleTree& tree, std::span<const Point> pts) {
    double total = dist(pts[tree.s], pts[tree.t]);
    for (const TriangleNode& node : tree.nodes) {
        if (node.removed)
            continue;
        // perim - 2 hyp = short sides minus hypotenuse
        total += dist(pts[node.a], pts[node.r]) +
                 dist(pts[node.r], pts[node.b]) - dist(pts[node.a], pts[node.b]);
    }
    return total;
}

namespace {

bool is_leaf(const TriangleNode& n) {
    return !n.removed && n.left == kNoChild && n.right == kNoChild;
}

void collect_leaves(const TriangleTree& tree, int idx, std::vector<int>& out) {
    if (idx < 0)
        return;
    const TriangleNode& n = tree.nodes[idx];
    collect_leaves(tree, n.left, out);
    if (is_leaf(n))
        out.push_back(idx);
    collect_leaves(tree, n.right, out);
}

void mark_removed(TriangleTree& tree, int idx) {
    if (idx < 0)
        return;
    tree.nodes[idx].removed = true;
    mark_removed(tree, tree.nodes[idx].left);
    mark_removed(tree, tree.nodes[idx].right);
}

// Walk emission that also records each leaf's walk position.
void emit_walk(const TriangleTree& tree, int idx,
               std::vector<std::uint32_t>& walk,
               std::vector<std::pair<int, std::size_t>>& leaf_pos) {
    const TriangleNode& n = tree.nodes[idx];
    if (n.left >= 0)
        emit_walk(tree, n.left, walk, leaf_pos);
    else
        walk.push_back(n.r);
    if (is_leaf(n))
        leaf_pos.emplace_back(idx, walk.size() - 1);
    if (n.right >= 0)
        emit_walk(tree, n.right, walk, leaf_pos);
    else
        walk.push_back(n.b);
}

}  // namespace

std::vector<int> leaf_nodes_in_order(const TriangleTree& tree) {
    std::vector<int> out;
    collect_leaves(tree, tree.root, out);
    return out;
}

std::size_t leaf_count(const TriangleTree& tree) {
    return leaf_nodes_in_order(tree).size();
}

std::vector<std::uint32_t> walk_from_tree(const TriangleTree& tree) {
    std::vector<std::uint32_t> walk{tree.s};
    if (tree.root >= 0) {
        std::vector<std::pair<int, std::size_t>> leaf_pos;
        for (const TriangleNode& n : tree.nodes)
            if (n.left == kDetached || n.right == kDetached)
                throw std::invalid_argument(
                    "walk_from_tree: tree has detached sides");
        emit_walk(tree, tree.root, walk, leaf_pos);
    } else {
        walk.push_back(tree.t);
    }
    return walk;
}

PruneResult prune_tree(const TriangleTree& tree, std::span<const Point> pts) {
    (void)pts;
    PruneResult result;
    result.tree = tree;
    TriangleTree& tr = result.tree;

    result.walk.push_back(tr.s);
    std::vector<std::pair<int, std::size_t>> leaf_pos;
    if (tr.root >= 0)
        emit_walk(tr, tr.root, result.walk, leaf_pos);
    else
        result.walk.push_back(tr.t);

    auto ancestors_of = [&](int idx) {
        std::vector<int> up;
        for (int n = idx; n >= 0; n = tr.nodes[n].parent)
            up.push_back(n);
        return up;  // idx first, root last
    };

    for (;;) {
        // Leaf-vertex multiplicities; pick the repeated vertex whose leaf
        // appears first in walk order.
        std::vector<std::size_t> count(pts.size(), 0);
        for (const auto& [idx, pos] : leaf_pos)
            ++count[tr.nodes[idx].r];
        int first_i = -1, last_i = -1;
        for (std::size_t i = 0; i < leaf_pos.size(); ++i) {
            const std::uint32_t v = tr.nodes[leaf_pos[i].first].r;
            if (count[v] >= 3) {
                first_i = static_cast<int>(i);
                for (std::size_t j = leaf_pos.size(); j-- > 0;) {
                    if (tr.nodes[leaf_pos[j].first].r == v) {
                        last_i = static_cast<int>(j);
                        break;
                    }
                }
                break;
            }
        }
        if (first_i < 0)
            break;

        const int leaf_first = leaf_pos[first_i].first;
        const int leaf_last = leaf_pos[last_i].first;
        const std::size_t pos_first = leaf_pos[first_i].second;
        const std::size_t pos_last = leaf_pos[last_i].second;

        // Locate the lowest common ancestor.
        const std::vector<int> up_first = ancestors_of(leaf_first);
        const std::vector<int> up_last = ancestors_of(leaf_last);
        int lca = -1;
        {
            std::vector<char> seen(tr.nodes.size(), 0);
            for (int n : up_first)
                seen[n] = 1;
            for (int n : up_last) {
                if (seen[n]) {
                    lca = n;
                    break;
                }
            }
        }
        if (lca < 0)
            throw std::logic_error("prune_tree: malformed tree (no LCA)");

        // Detach everything hanging between the two leaves in leaf order:
        // right subtrees off the first leaf's spine where it continues
        // left, left subtrees off the last leaf's spine where it
        // continues right.  The LCA keeps both of its subtrees.
        for (std::size_t i = 0; up_first[i + 1] != lca; ++i) {
            const int child = up_first[i];
            TriangleNode& parent = tr.nodes[up_first[i + 1]];
            if (parent.left == child && parent.right >= 0) {
                mark_removed(tr, parent.right);
                parent.right = kDetached;
            }
        }
        for (std::size_t i = 0; up_last[i + 1] != lca; ++i) {
            const int child = up_last[i];
            TriangleNode& parent = tr.nodes[up_last[i + 1]];
            if (parent.right == child && parent.left >= 0) {
                mark_removed(tr, parent.left);
                parent.left = kDetached;
            }
        }

        // Splice the walk between the two appearances of v.
        std::vector<std::uint32_t> next;
        next.insert(next.end(), result.walk.begin(),
                    result.walk.begin() + static_cast<long>(pos_first) + 1);
        next.insert(next.end(),
                    result.walk.begin() + static_cast<long>(pos_last) + 1,
                    result.walk.end());
        result.walk = std::move(next);

        // Keep the surviving leaves; shift positions past the splice.
        const std::size_t shift = pos_last - pos_first;
        std::vector<std::pair<int, std::size_t>> kept;
        for (const auto& [idx, pos] : leaf_pos) {
            if (tr.nodes[idx].removed)
                continue;
            if (pos > pos_first && pos < pos_last && idx != leaf_first &&
                idx != leaf_last)
                throw std::logic_error(
                    "prune_tree: surviving leaf inside spliced range");
            kept.emplace_back(idx, pos >= pos_last ? pos - shift : pos);
        }
        leaf_pos = std::move(kept);
    }
    return result;
}

double single_leaf_bound(double theta) {
    if (!(theta > kPi / 2))
        throw std::invalid_argument("single_leaf_bound: theta must exceed pi/2");
    return -1.0 / std::cos(theta);
}

double tree_length_bound(double theta, std::uint64_t leaves) {
    if (leaves < 1)
        throw std::invalid_argument("tree_length_bound: leaf_count must be >= 1");
    const int exponent = 1 + (std::bit_width(leaves) - 1);  // 1 + floor(log2)
    return std::pow(single_leaf_bound(theta), exponent);
}

double dilation_upper_bound(std::uint64_t n, double beta) {
    if (!(beta > 0.0) || beta > 1.0)
        throw std::invalid_argument("dilation_upper_bound: beta out of (0, 1]");
    const double sqrt3_2 = std::sqrt(3.0) / 2.0;
    if (beta >= sqrt3_2)
        return static_cast<double>(n - 1);  // MST fallback
    return tree_length_bound(kPi - std::asin(beta), 2 * n);
}

double upper_exponent(double beta) {
    if (!(beta > 0.0 && beta < std::sqrt(3.0) / 2.0))
        throw std::invalid_argument(
            "upper_exponent: beta out of (0, sqrt(3)/2)");
    return -0.5 * std::log2(1.0 - beta * beta);
}

double lower_exponent(double theta) {
    return std::log(fractal_unit_dilation(theta)) / std::log(5.0);
}

BoundExponents bound_exponents(double beta, double theta) {
    return BoundExponents{upper_exponent(beta), lower_exponent(theta)};
}

}  // namespace bsk
