#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "kneser/error.hpp"
#include "kneser/graph.hpp"

namespace kneser {

/// Degree sequence read along a rooted vertex sequence; compared
/// lexicographically.
struct DegreeProfile {
    std::vector<int> degrees;

    std::size_t size() const noexcept { return degrees.size(); }
    int operator[](std::size_t i) const { return degrees[i]; }

    friend auto operator<=>(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Vertex ordering by non-decreasing distance from `root`. parent[root] is -1.
struct RootedOrder {
    std::vector<int> sequence;
    int root = 0;
    std::vector<int> parent;

    /// position[v] = index of v in `sequence`.
    std::vector<int> positions() const {
        std::vector<int> pos(sequence.size());
        for (std::size_t i = 0; i < sequence.size(); ++i) pos[sequence[i]] = static_cast<int>(i);
        return pos;
    }
};

inline std::string to_string(const DegreeProfile& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

/// Lex-minimal degree profile over rooted vertex sequences with root `root`.
///
/// A rooted vertex sequence may only permute vertices inside one distance
/// layer, so listing every BFS layer by ascending degree is optimal. Ties are
/// broken by vertex label. The single-vertex tree has profile (0).
inline std::pair<DegreeProfile, RootedOrder> min_rooted_degree_sequence(const SimpleGraph& tree, int root) {
    if (!is_tree(tree)) throw NotATree();
    if (root < 0 || root >= tree.order()) throw InvalidInput("root out of range");

    const auto n = static_cast<std::size_t>(tree.order());
    RootedOrder order;
    order.root = root;
    order.parent.assign(n, -1);
    order.sequence.reserve(n);

    std::vector<char> seen(n, 0);
    std::vector<int> layer{root};
    seen[root] = 1;
    auto by_degree = [&](int a, int b) {
        return std::pair(tree.degree(a), a) < std::pair(tree.degree(b), b);
    };
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(), by_degree);
        std::vector<int> next;
        for (int v : layer) {
            order.sequence.push_back(v);
            for (int w : tree.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.parent[w] = v;
                    next.push_back(w);
                }
        }
        layer = std::move(next);
    }

    DegreeProfile profile;
    profile.degrees.reserve(n);
    for (int v : order.sequence) profile.degrees.push_back(tree.degree(v));
    return {std::move(profile), std::move(order)};
}

/// Every vertex whose rooted profile is lex-minimal over all roots, ascending.
inline std::vector<int> minimum_leaves(const SimpleGraph& tree) {
    if (!is_tree(tree)) throw NotATree();
    std::vector<int> best_vertices;
    DegreeProfile best;
    for (int v = 0; v < tree.order(); ++v) {
        auto profile = min_rooted_degree_sequence(tree, v).first;
        if (best_vertices.empty() || profile < best) {
            best = std::move(profile);
            best_vertices = {v};
        } else if (profile == best) {
            best_vertices.push_back(v);
        }
    }
    return best_vertices;
}

/// r(T): the rooted profile at any minimum leaf.
inline DegreeProfile min_degree_sequence(const SimpleGraph& tree) {
    const auto leaves = minimum_leaves(tree);
    return min_rooted_degree_sequence(tree, leaves.front()).first;
}

} // namespace kneser
