#pragma once

#include <map>
#include <set>
#include <vector>

#include "kneser/canonical.hpp"
#include "kneser/error.hpp"
#include "kneser/graph.hpp"

namespace kneser {

inline constexpr int kTreeCap = 12;
inline constexpr int kGraphCap = 8;

/// One representative per isomorphism class of free trees on n vertices.
/// Trees on n vertices are grown from trees on n - 1 vertices by attaching
/// a leaf anywhere and deduplicating by canonical form. Each representative
/// is in canonical labeling; the list is sorted by canonical form.
inline std::vector<SimpleGraph> enumerate_trees(int n) {
    if (n < 1) throw InvalidInput("tree order must be positive");
    if (n > kTreeCap) throw CapExceeded("tree order", n, kTreeCap);

    std::map<CanonicalForm, SimpleGraph> level;
    level.emplace(canonical_form(SimpleGraph(1)), SimpleGraph(1));
    for (int size = 2; size <= n; ++size) {
        std::map<CanonicalForm, SimpleGraph> next;
        for (const auto& [form, tree] : level) {
            for (int attach = 0; attach < tree.order(); ++attach) {
                auto es = tree.edges();
                es.push_back({attach, size - 1});
                const auto canon = canonical_graph(Multigraph(SimpleGraph(size, std::move(es))));
                next.try_emplace(canonical_form(canon), canon.to_simple());
            }
        }
        level = std::move(next);
    }
    std::vector<SimpleGraph> out;
    out.reserve(level.size());
    for (auto& [form, tree] : level) out.push_back(std::move(tree));
    return out;
}

/// One representative per isomorphism class of simple graphs on n vertices
/// (connected or not), grown edge by edge with canonical deduplication.
/// Ordered by edge count, then canonical form.
inline std::vector<SimpleGraph> enumerate_graphs(int n) {
    if (n < 0) throw InvalidInput("graph order must be non-negative");
    if (n > kGraphCap) throw CapExceeded("graph order", n, kGraphCap);

    std::vector<SimpleGraph> out;
    std::map<CanonicalForm, SimpleGraph> level;
    level.emplace(canonical_form(SimpleGraph(n)), SimpleGraph(n));
    while (!level.empty()) {
        std::map<CanonicalForm, SimpleGraph> next;
        for (const auto& [form, g] : level) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    auto es = g.edges();
                    es.push_back({u, v});
                    const auto canon = canonical_graph(Multigraph(SimpleGraph(n, std::move(es))));
                    next.try_emplace(canonical_form(canon), canon.to_simple());
                }
        }
        for (auto& [form, g] : level) out.push_back(std::move(g));
        level = std::move(next);
    }
    return out;
}

/// Connected loopless multigraphs with exactly `edges` edges (counted with
/// multiplicity) and no isolated vertices, one per isomorphism class, in
/// canonical labeling, sorted by canonical form.
inline std::vector<std::pair<CanonicalForm, Multigraph>> enumerate_connected_multigraphs(int edges) {
    if (edges < 1) throw InvalidInput("edge count must be positive");
    if (edges + 1 > kCanonicalCap) throw CapExceeded("multigraph vertex count", edges + 1, kCanonicalCap);

    std::map<CanonicalForm, Multigraph> level;
    const Multigraph single(2, {{0, 1}});
    level.emplace(canonical_form(single), canonical_graph(single));
    for (int m = 2; m <= edges; ++m) {
        std::map<CanonicalForm, Multigraph> next;
        for (const auto& [form, g] : level) {
            const int n = g.order();
            for (int u = 0; u < n; ++u) {
                // new pendant vertex
                {
                    auto ps = g.pairs();
                    ps.push_back({u, n});
                    const Multigraph h(n + 1, std::move(ps));
                    next.try_emplace(canonical_form(h), canonical_graph(h));
                }
                for (int v = u + 1; v < n; ++v) {
                    auto ps = g.pairs();
                    ps.push_back({u, v});
                    const Multigraph h(n, std::move(ps));
                    next.try_emplace(canonical_form(h), canonical_graph(h));
                }
            }
        }
        level = std::move(next);
    }
    std::vector<std::pair<CanonicalForm, Multigraph>> out(level.begin(), level.end());
    return out;
}

} // namespace kneser
