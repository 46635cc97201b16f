#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "kneser/canonical.hpp"
#include "kneser/error.hpp"
#include "kneser/graph.hpp"

namespace kneser {

/// Index of a power-sum basis element: the sorted multiset of canonical
/// forms of the connected components of G_lambda.
///
/// k = 2 components use the edge-list form "n:[[u,v],...]". A connected
/// k = 1 component is c copies of one singleton and is written
/// "1:[[0],[0],...]".
struct PClass {
    std::vector<std::string> components;

    PClass() = default;
    explicit PClass(std::vector<std::string> parts) : components(std::move(parts)) {
        std::sort(components.begin(), components.end());
    }

    friend auto operator<=>(const PClass&, const PClass&) = default;
};

inline std::string singleton_star_form(int copies) {
    std::string out = "1:[";
    for (int i = 0; i < copies; ++i) out += i ? ",[0]" : "[0]";
    return out + "]";
}

inline bool is_singleton_form(std::string_view form) { return form.substr(0, 3) == "1:[" && form.find("[0]") != form.npos; }

/// Number of blocks described by a component form.
inline int form_edge_count(std::string_view form) {
    if (is_singleton_form(form)) return static_cast<int>(std::count(form.begin(), form.end(), '[')) - 1;
    return static_cast<int>(std::count(form.begin(), form.end(), ',') + 1) / 2;
}

inline int class_edge_count(const PClass& c) {
    int total = 0;
    for (const auto& f : c.components) total += form_edge_count(f);
    return total;
}

/// Representative Lambda of a component form, with base {0, ..., b-1}.
inline Lambda lambda_from_form(std::string_view form) {
    if (is_singleton_form(form)) {
        return Lambda(1, std::vector<Block>(static_cast<std::size_t>(form_edge_count(form)), Block::singleton(0)));
    }
    return Lambda::from_multigraph(parse_edge_list(form));
}

/// Form of a connected Lambda.
inline std::string component_form(const Lambda& part) {
    if (part.k() == 1) {
        if (part.base().size() != 1) throw InvalidInput("k = 1 component must use a single symbol");
        return singleton_star_form(static_cast<int>(part.size()));
    }
    return canonical_form(part.to_multigraph()).str();
}

/// The class of lambda (its S_N orbit).
inline PClass class_of(const Lambda& lambda) {
    std::vector<std::string> parts;
    for (const auto& c : connected_components(lambda)) parts.push_back(component_form(c));
    return PClass(std::move(parts));
}

/// Representative of a class: components placed on disjoint symbol ranges
/// in component order.
inline Lambda representative(const PClass& c, int k) {
    std::vector<Block> blocks;
    int offset = 0;
    for (const auto& f : c.components) {
        const auto part = lambda_from_form(f);
        if (part.k() != k) throw InvalidInput("component form has the wrong block size");
        for (const auto& b : part.blocks()) blocks.push_back({b.lo + offset, b.hi + offset});
        offset += static_cast<int>(part.base().size());
    }
    return Lambda(k, std::move(blocks));
}

/// True when the class is a single k = 2 component whose multigraph is a tree.
inline bool is_tree_class(const PClass& c) {
    if (c.components.size() != 1 || is_singleton_form(c.components.front())) return false;
    return is_tree(parse_edge_list(c.components.front()));
}

} // namespace kneser
