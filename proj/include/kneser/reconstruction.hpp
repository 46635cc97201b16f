#pragma once

#include <optional>
#include <set>
#include <vector>

#include "kneser/admissible.hpp"
#include "kneser/error.hpp"
#include "kneser/graph.hpp"
#include "kneser/pclass.hpp"
#include "kneser/psum.hpp"
#include "kneser/tree_invariants.hpp"
#include "kneser/tree_lambda.hpp"

namespace kneser {

struct ReconstructionResult {
    SimpleGraph tree;
    PClass source_class;
    int removed_leaf = 0; // label in the canonical representative of source_class
    /// witness[v] = vertex of `tree` matched to vertex v of the original graph.
    std::optional<std::vector<int>> witness;
};

namespace detail {

/// sigma[x] = position of symbol x in the minimum rooted vertex sequence of
/// the tree on symbols 0..n rooted at its smallest minimum leaf.
inline std::vector<int> rooting_permutation(const SimpleGraph& tree) {
    const int leaf = minimum_leaves(tree).front();
    return min_rooted_degree_sequence(tree, leaf).second.positions();
}

inline SimpleGraph symbol_tree(const Lambda& lambda) {
    if (lambda.k() != 2) throw InvalidInput("tree classes need k = 2");
    const auto base = lambda.base();
    const int n = static_cast<int>(lambda.size());
    if (static_cast<int>(base.size()) != n + 1 || base.front() != 0 || base.back() != n)
        throw NotATree("lambda base must be {0, ..., n} for a tree on n + 1 vertices");
    const auto g = lambda.to_multigraph();
    if (!is_tree(g)) throw NotATree("G_lambda is not a tree");
    return g.to_simple();
}

} // namespace detail

/// Relabels the symbols of a tree lambda (base {0..n}) so that 0, 1, ..., n
/// is a minimum rooted vertex sequence rooted at a minimum leaf 0. Block
/// order is preserved.
inline Lambda rooted_relabel(const Lambda& lambda) {
    const auto sigma = detail::rooting_permutation(detail::symbol_tree(lambda));
    std::vector<Block> blocks;
    blocks.reserve(lambda.size());
    for (const auto& b : lambda.blocks()) blocks.push_back(Block::pair(sigma[b.lo], sigma[b.hi]));
    return Lambda(2, std::move(blocks));
}

/// v -> max(phi(v)). Injective when `rooted` is rooted and phi admissible,
/// because every non-root symbol has a unique parent.
inline std::vector<int> tau_witness(const Lambda& rooted, const SimpleGraph& g, const AdmissibleWitness& phi) {
    if (phi.assignment.size() != static_cast<std::size_t>(g.order()) || rooted.size() != phi.assignment.size())
        throw InvalidInput("witness size does not match the graph");
    if (Lambda(2, phi.assignment) != rooted) throw InvalidInput("witness blocks differ from lambda");
    const int n = g.order();
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
        const int image = phi.assignment[v].max();
        if (image < 1 || image > n || hit[image]) throw InvalidInput("max-symbol map is not injective");
        hit[image] = 1;
        tau[v] = image;
    }
    return tau;
}

/// Rebuilds the tree from its tree classes: keep the classes of lex-minimal
/// minimum degree sequence, take the canonically smallest, delete its
/// smallest minimum leaf and relabel the rest order-preservingly.
///
/// With `original`, also returns the isomorphism original -> result obtained
/// from an admissibility witness of the rooted lambda.
inline ReconstructionResult reconstruct_from_lambda_t(const std::set<PClass>& classes,
                                                      const SimpleGraph* original = nullptr) {
    if (classes.empty()) throw InvalidInput("no tree classes to reconstruct from");
    const int n = class_edge_count(*classes.begin());
    for (const auto& c : classes) {
        if (!is_tree_class(c)) throw NotATree("class " + c.components.front() + " is not a tree");
        if (class_edge_count(c) != n) throw InvalidInput("tree classes of different sizes");
    }

    ReconstructionResult result;
    result.source_class = *minimal_profile_classes(classes).classes.begin();
    const auto big = tree_of_class(result.source_class);

    if (n == 1) {
        // single edge: both ends are minimum leaves, the rest is K_1
        result.tree = SimpleGraph(1);
        result.removed_leaf = 0;
        if (original) {
            if (original->order() != 1) throw InvalidInput("original graph does not match the classes");
            result.witness = std::vector<int>{0};
        }
        return result;
    }

    const auto sigma = detail::rooting_permutation(big);
    int leaf = 0;
    for (int x = 0; x <= n; ++x)
        if (sigma[x] == 0) leaf = x;
    result.removed_leaf = leaf;
    result.tree = remove_vertex(big, leaf);

    if (original) {
        if (original->order() != n) throw InvalidInput("original graph does not match the classes");
        const auto rooted = rooted_relabel(representative(result.source_class, 2));
        const auto phi = is_admissible(rooted, *original);
        if (!phi) throw InvalidInput("original graph does not admit the selected class");
        const auto tau = tau_witness(rooted, *original, *phi);
        std::vector<int> symbol_of(static_cast<std::size_t>(n) + 1);
        for (int x = 0; x <= n; ++x) symbol_of[sigma[x]] = x;
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const int x = symbol_of[tau[v]];
            w[v] = x > leaf ? x - 1 : x;
        }
        result.witness = std::move(w);
    }
    return result;
}

/// Tree classes in the support of a k = 2 series of degree n.
inline std::set<PClass> tree_classes(const PSeries& series) {
    std::set<PClass> out;
    for (const auto& [c, a] : series.terms)
        if (is_tree_class(c) && class_edge_count(c) == series.n) out.insert(c);
    return out;
}

/// Reconstruction from a k = 2 invariant using only which classes occur.
inline ReconstructionResult reconstruct_from_invariant(const PSeries& series, const SimpleGraph* original = nullptr) {
    if (series.k != 2) throw InvalidInput("reconstruction needs the k = 2 invariant");
    const auto classes = tree_classes(series);
    if (classes.empty()) throw InvalidInput("support contains no tree class");
    return reconstruct_from_lambda_t(classes, original);
}

/// True when `map` is a bijection V(a) -> V(b) carrying edges onto edges.
inline bool is_isomorphism(const SimpleGraph& a, const SimpleGraph& b, const std::vector<int>& map) {
    if (a.order() != b.order() || a.size() != b.size() || map.size() != static_cast<std::size_t>(a.order()))
        return false;
    std::vector<char> hit(map.size(), 0);
    for (int x : map) {
        if (x < 0 || x >= b.order() || hit[x]) return false;
        hit[x] = 1;
    }
    for (const auto& e : a.edges())
        if (!b.has_edge(map[e.u], map[e.v])) return false;
    return true;
}

} // namespace kneser
