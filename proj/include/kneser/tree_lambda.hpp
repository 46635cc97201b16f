#pragma once

#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "kneser/admissible.hpp"
#include "kneser/canonical.hpp"
#include "kneser/enumerate.hpp"
#include "kneser/error.hpp"
#include "kneser/graph.hpp"
#include "kneser/pclass.hpp"
#include "kneser/tree_invariants.hpp"

namespace kneser {

inline constexpr int kLambdaTCap = kTreeCap - 1;

namespace detail {

inline const std::vector<SimpleGraph>& cached_trees(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<SimpleGraph>> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, enumerate_trees(n)).first;
    return it->second;
}

} // namespace detail

/// The tree G_lambda of a tree class, in the class's canonical labeling.
inline SimpleGraph tree_of_class(const PClass& c) {
    if (!is_tree_class(c)) throw NotATree("class is not a single tree component");
    return parse_edge_list(c.components.front()).to_simple();
}

/// Classes of the support whose multigraph is a tree. For a tree G on n
/// vertices these are exactly the trees on n + 1 vertices admissible by G,
/// which is how they are found here: every free tree on n + 1 vertices is
/// tested against G directly, without expanding edge subsets.
inline std::set<PClass> lambda_t(const SimpleGraph& g) {
    if (!is_tree(g)) throw NotATree();
    if (g.order() > kLambdaTCap) throw CapExceeded("tree-class extraction vertex count", g.order(), kLambdaTCap);
    std::set<PClass> out;
    for (const auto& candidate : detail::cached_trees(g.order() + 1)) {
        if (is_admissible(Lambda::from_multigraph(Multigraph(candidate)), g))
            out.insert(PClass({canonical_form(candidate).str()}));
    }
    return out;
}

struct MinimalTreeClasses {
    std::set<PClass> classes;
    DegreeProfile profile;
};

/// Tree classes whose minimum degree sequence is lex-minimal among `classes`.
inline MinimalTreeClasses minimal_profile_classes(const std::set<PClass>& classes) {
    MinimalTreeClasses out;
    bool first = true;
    for (const auto& c : classes) {
        auto profile = min_degree_sequence(tree_of_class(c));
        if (first || profile < out.profile) {
            out.profile = std::move(profile);
            out.classes = {c};
            first = false;
        } else if (profile == out.profile) {
            out.classes.insert(c);
        }
    }
    return out;
}

inline MinimalTreeClasses lambda_t_tilde(const SimpleGraph& g) { return minimal_profile_classes(lambda_t(g)); }

/// Admissible tree lambda built from a minimum rooted vertex sequence
/// a_1, ..., a_n of `tree` at its smallest minimum leaf: a_i gets the block
/// {index of parent, i}, and the root gets {0, 1}. blocks()[v] is the block
/// of vertex v.
inline Lambda augment_tree_lambda(const SimpleGraph& tree) {
    if (!is_tree(tree)) throw NotATree();
    const int leaf = minimum_leaves(tree).front();
    const auto order = min_rooted_degree_sequence(tree, leaf).second;
    const auto pos = order.positions();
    std::vector<Block> blocks(static_cast<std::size_t>(tree.order()));
    for (int v = 0; v < tree.order(); ++v) {
        const int i = pos[v] + 1;
        const int parent = order.parent[v] < 0 ? 0 : pos[order.parent[v]] + 1;
        blocks[v] = Block::pair(parent, i);
    }
    return Lambda(2, std::move(blocks));
}

} // namespace kneser
