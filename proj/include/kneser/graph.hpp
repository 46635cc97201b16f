#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kneser/error.hpp"

namespace kneser {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex-labeled simple graph on vertices 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw InvalidInput("negative vertex count");
    }

    /// Endpoint order inside each pair is irrelevant. Loops, duplicates and
    /// out-of-range endpoints are rejected.
    SimpleGraph(int n, std::vector<Edge> edges) : SimpleGraph(n) {
        for (auto& e : edges) {
            if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n) throw InvalidInput("edge endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InvalidInput("duplicate edge");
        edges_ = std::move(edges);
        for (const auto& e : edges_) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& row : adj_) std::sort(row.begin(), row.end());
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const int> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& row = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Edge of a multigraph together with its multiplicity.
struct MultiEdge {
    int u = 0;
    int v = 0;
    int mult = 1;

    friend auto operator<=>(const MultiEdge&, const MultiEdge&) = default;
};

/// Loopless multigraph on vertices 0..n-1. Edges are kept as a sorted
/// pair-with-multiplicity list.
class Multigraph {
public:
    Multigraph() = default;

    /// `pairs` may repeat; repeats become multiplicity.
    Multigraph(int n, std::vector<Edge> pairs) : n_(n) {
        if (n < 0) throw InvalidInput("negative vertex count");
        for (auto& e : pairs) {
            if (e.u == e.v) throw InvalidInput("multigraph loops are not allowed");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n) throw InvalidInput("edge endpoint out of range");
        }
        std::sort(pairs.begin(), pairs.end());
        for (const auto& e : pairs) {
            if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
                ++edges_.back().mult;
            else
                edges_.push_back({e.u, e.v, 1});
        }
    }

    explicit Multigraph(const SimpleGraph& g) : n_(g.order()) {
        edges_.reserve(g.size());
        for (const auto& e : g.edges()) edges_.push_back({e.u, e.v, 1});
    }

    int order() const noexcept { return n_; }
    const std::vector<MultiEdge>& edges() const noexcept { return edges_; }

    /// Total number of edges counted with multiplicity.
    int edge_count() const noexcept {
        int total = 0;
        for (const auto& e : edges_) total += e.mult;
        return total;
    }

    bool has_multi_edges() const noexcept {
        return std::any_of(edges_.begin(), edges_.end(), [](const MultiEdge& e) { return e.mult > 1; });
    }

    /// Every edge listed `mult` times.
    std::vector<Edge> pairs() const {
        std::vector<Edge> out;
        for (const auto& e : edges_)
            for (int i = 0; i < e.mult; ++i) out.push_back({e.u, e.v});
        return out;
    }

    /// The underlying simple graph. Throws when multi-edges are present.
    SimpleGraph to_simple() const {
        if (has_multi_edges()) throw InvalidInput("multigraph has repeated edges");
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (const auto& e : edges_) es.push_back({e.u, e.v});
        return SimpleGraph(n_, std::move(es));
    }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int n_ = 0;
    std::vector<MultiEdge> edges_;
};

/// A 1- or 2-subset of the naturals. Singletons are stored with lo == hi.
struct Block {
    int lo = 0;
    int hi = 0;

    static Block singleton(int x) { return {x, x}; }

    static Block pair(int a, int b) {
        if (a == b) throw InvalidInput("2-subset needs distinct elements");
        return a < b ? Block{a, b} : Block{b, a};
    }

    int size() const noexcept { return lo == hi ? 1 : 2; }
    int max() const noexcept { return hi; }

    bool contains(int x) const noexcept { return lo == x || hi == x; }
    bool intersects(const Block& o) const noexcept {
        return lo == o.lo || lo == o.hi || hi == o.lo || hi == o.hi;
    }

    friend auto operator<=>(const Block&, const Block&) = default;
};

/// Multiset of k-subsets (k = 1 or 2); the edge multiset of the
/// hyper-multigraph it spans. Block order is kept as given so that a
/// Lambda can double as a vertex-indexed assignment.
class Lambda {
public:
    Lambda() = default;

    Lambda(int k, std::vector<Block> blocks) : k_(k), blocks_(std::move(blocks)) {
        if (k != 1 && k != 2) throw InvalidInput("block size must be 1 or 2");
        for (const auto& b : blocks_) {
            if (b.size() != k) throw InvalidInput("block of wrong size");
            if (b.lo < 0) throw InvalidInput("negative symbol");
        }
    }

    static Lambda pairs(std::initializer_list<std::pair<int, int>> list) {
        std::vector<Block> bs;
        for (auto [a, b] : list) bs.push_back(Block::pair(a, b));
        return Lambda(2, std::move(bs));
    }

    static Lambda from_multigraph(const Multigraph& g) {
        std::vector<Block> bs;
        for (const auto& e : g.pairs()) bs.push_back(Block::pair(e.u, e.v));
        return Lambda(2, std::move(bs));
    }

    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    /// Sorted distinct symbols appearing in some block.
    std::vector<int> base() const {
        std::vector<int> out;
        for (const auto& b : blocks_) {
            out.push_back(b.lo);
            if (b.hi != b.lo) out.push_back(b.hi);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<Block> sorted_blocks() const {
        auto out = blocks_;
        std::sort(out.begin(), out.end());
        return out;
    }

    /// G_lambda for k = 2 with the base relabeled order-preservingly to 0..|base|-1.
    Multigraph to_multigraph() const {
        if (k_ != 2) throw InvalidInput("multigraph view needs k = 2");
        const auto b = base();
        auto index = [&](int x) {
            return static_cast<int>(std::lower_bound(b.begin(), b.end(), x) - b.begin());
        };
        std::vector<Edge> es;
        es.reserve(blocks_.size());
        for (const auto& blk : blocks_) es.push_back({index(blk.lo), index(blk.hi)});
        return Multigraph(static_cast<int>(b.size()), std::move(es));
    }

    /// Multiset equality.
    friend bool operator==(const Lambda& a, const Lambda& b) {
        return a.k_ == b.k_ && a.sorted_blocks() == b.sorted_blocks();
    }

private:
    int k_ = 2;
    std::vector<Block> blocks_;
};

namespace detail {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace detail

/// Vertex sets of the connected components of `g` under the edge subset
/// selected by `mask` (bit i keeps edge i). Components are ordered by their
/// smallest vertex; each vertex list is sorted.
inline std::vector<std::vector<int>> component_vertex_sets(const SimpleGraph& g, std::uint64_t mask) {
    detail::DisjointSets ds(static_cast<std::size_t>(g.order()));
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (mask >> i & 1U) ds.unite(es[i].u, es[i].v);
    std::vector<std::vector<int>> out;
    std::vector<int> slot(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        const int r = ds.find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(v);
    }
    return out;
}

inline std::vector<std::vector<int>> component_vertex_sets(const SimpleGraph& g) {
    return component_vertex_sets(g, g.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1);
}

inline bool is_connected(const SimpleGraph& g) {
    return g.order() <= 1 || component_vertex_sets(g).size() == 1;
}

/// Subgraph induced by `vertices` (sorted), relabeled order-preservingly,
/// keeping only the edges of `g` selected by `mask`.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices, std::uint64_t mask) {
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    const auto& all = g.edges();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!(mask >> i & 1U)) continue;
        const int a = index[all[i].u];
        const int b = index[all[i].v];
        if (a >= 0 && b >= 0) es.push_back({a, b});
    }
    return SimpleGraph(static_cast<int>(vertices.size()), std::move(es));
}

/// Image of `g` under the vertex map v -> perm[v].
inline SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
    std::vector<Edge> es;
    es.reserve(g.size());
    for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
    return SimpleGraph(g.order(), std::move(es));
}

/// `g` with vertex `v` deleted; remaining vertices keep their relative order.
inline SimpleGraph remove_vertex(const SimpleGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw InvalidInput("vertex out of range");
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        es.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
    }
    return SimpleGraph(g.order() - 1, std::move(es));
}

inline bool is_tree(const SimpleGraph& g) {
    if (g.order() == 0) return false;
    return static_cast<int>(g.size()) == g.order() - 1 && is_connected(g);
}

/// A repeated edge is a 2-cycle, so multigraphs with multiplicity > 1 are never trees.
inline bool is_tree(const Multigraph& g) {
    if (g.order() == 0 || g.has_multi_edges()) return false;
    return is_tree(g.to_simple());
}

/// Groups the blocks of `lambda` by connectivity of G_lambda. Parts are
/// ordered by first appearance in `lambda`; block order is preserved inside
/// each part.
inline std::vector<Lambda> connected_components(const Lambda& lambda) {
    const auto base = lambda.base();
    auto index = [&](int x) {
        return static_cast<int>(std::lower_bound(base.begin(), base.end(), x) - base.begin());
    };
    detail::DisjointSets ds(base.size());
    for (const auto& b : lambda.blocks()) ds.unite(index(b.lo), index(b.hi));

    std::vector<int> slot(base.size(), -1);
    std::vector<std::vector<Block>> parts;
    for (const auto& b : lambda.blocks()) {
        const int r = ds.find(index(b.lo));
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[slot[r]].push_back(b);
    }
    std::vector<Lambda> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.emplace_back(lambda.k(), std::move(p));
    return out;
}

// Named graphs used throughout examples and tests.

inline SimpleGraph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return SimpleGraph(n, std::move(es));
}

inline SimpleGraph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return SimpleGraph(leaves + 1, std::move(es));
}

inline SimpleGraph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return SimpleGraph(n, std::move(es));
}

inline SimpleGraph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return SimpleGraph(n, std::move(es));
}

} // namespace kneser
