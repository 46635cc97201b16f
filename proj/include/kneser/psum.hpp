#pragma once

#include <cstdint>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kneser/admissible.hpp"
#include "kneser/canonical.hpp"
#include "kneser/error.hpp"
#include "kneser/graph.hpp"
#include "kneser/pclass.hpp"

namespace kneser {

/// Largest graph for which the full power-sum series is computed.
inline constexpr int kPsumCap = 7;

/// Integer combination of power-sum basis elements of degree n.
struct PSeries {
    int n = 0;
    int k = 2;
    std::map<PClass, long long> terms; // zero coefficients are never stored

    std::set<PClass> support() const {
        std::set<PClass> out;
        for (const auto& [c, a] : terms) out.insert(c);
        return out;
    }

    long long coefficient(const PClass& c) const {
        const auto it = terms.find(c);
        return it == terms.end() ? 0 : it->second;
    }

    friend bool operator==(const PSeries&, const PSeries&) = default;
};

/// X_{K_{N,k}}(G) in the power-sum basis. Expanding the disjointness
/// condition on every edge by inclusion-exclusion gives
///   sum over S of E(G) of (-1)^|S| times the product over components C of
///   G_S of sum over classes admissible by C of (#admissible maps) p_class.
/// The map count is 1 for every k = 1 class but not for k = 2 (K_2 maps onto
/// {{0,1},{1,2}} in two ways). Edge subsets with the same multiset of
/// component shapes are merged before the products are expanded.
inline PSeries kneser_psum(const SimpleGraph& g, int k) {
    if (k != 1 && k != 2) throw InvalidInput("block size must be 1 or 2");
    if (g.order() > kPsumCap) throw CapExceeded("power-sum expansion vertex count", g.order(), kPsumCap);
    if (g.order() < 1) throw InvalidInput("empty graph");

    const auto m = g.size();
    // component shapes of G_S -> signed count of such S
    std::map<std::vector<std::string>, long long> shapes;
    std::map<std::string, SimpleGraph> shape_graph;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        std::vector<std::string> key;
        for (const auto& comp : component_vertex_sets(g, s)) {
            // k = 1 classes only see component sizes
            if (k == 1) {
                key.push_back(singleton_star_form(static_cast<int>(comp.size())));
                continue;
            }
            const auto sub = induced_subgraph(g, comp, s);
            auto form = canonical_form(sub).str();
            shape_graph.try_emplace(form, sub);
            key.push_back(std::move(form));
        }
        std::sort(key.begin(), key.end());
        shapes[key] += (std::popcount(s) % 2 == 0) ? 1 : -1;
    }

    std::map<std::string, std::vector<WeightedForm>> forms_of;
    for (const auto& [form, sub] : shape_graph) forms_of.emplace(form, admissible_component_forms(sub, k));
    if (k == 1)
        for (int c = 1; c <= g.order(); ++c)
            forms_of.emplace(singleton_star_form(c), std::vector<WeightedForm>{{singleton_star_form(c), 1}});

    std::map<PClass, long long> acc;
    for (const auto& [key, sign] : shapes) {
        if (sign == 0) continue;
        std::vector<const std::vector<WeightedForm>*> factors;
        for (const auto& f : key) factors.push_back(&forms_of.at(f));
        if (std::any_of(factors.begin(), factors.end(), [](auto* f) { return f->empty(); })) continue;
        // Each choice of one class per component is a separate element of
        // the product, so two choices giving the same multiset both count.
        std::vector<std::size_t> pick(factors.size(), 0);
        for (;;) {
            std::vector<std::string> parts;
            parts.reserve(factors.size());
            long long weight = sign;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const auto& wf = (*factors[i])[pick[i]];
                parts.push_back(wf.form);
                weight *= wf.maps;
            }
            acc[PClass(std::move(parts))] += weight;
            std::size_t i = 0;
            while (i < factors.size() && ++pick[i] == factors[i]->size()) pick[i++] = 0;
            if (i == factors.size()) break;
        }
    }

    PSeries out;
    out.n = g.order();
    out.k = k;
    for (auto& [c, a] : acc)
        if (a != 0) out.terms.emplace(c, a);
    return out;
}

/// Both readings of the support of X_{K_{N,k}}(G): the classes with nonzero
/// coefficient, and the plain union of admissible classes over all edge
/// subsets. They differ only if signed contributions cancel.
struct LambdaSupport {
    std::set<PClass> signed_support;
    std::set<PClass> unsigned_union;

    bool consistent() const { return signed_support == unsigned_union; }
};

inline LambdaSupport lambda_support(const SimpleGraph& g, int k) {
    LambdaSupport out;
    out.signed_support = kneser_psum(g, k).support();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
        auto part = admissible_for_subgraph(g, s, k);
        out.unsigned_union.insert(part.begin(), part.end());
    }
    return out;
}

} // namespace kneser
