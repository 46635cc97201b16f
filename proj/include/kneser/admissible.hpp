#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kneser/canonical.hpp"
#include "kneser/enumerate.hpp"
#include "kneser/error.hpp"
#include "kneser/graph.hpp"
#include "kneser/pclass.hpp"

namespace kneser {

/// Largest connected component handled by enumerate_admissible_classes.
inline constexpr int kAdmissibleCap = 7;

/// Bijection V(G) -> blocks of lambda; assignment[v] is the block of v.
struct AdmissibleWitness {
    std::vector<Block> assignment;
};

/// Component form together with the number of admissible maps onto it.
struct WeightedForm {
    std::string form;
    long long maps = 1;

    friend auto operator<=>(const WeightedForm&, const WeightedForm&) = default;
};

namespace detail {

class AdmissibilitySearch {
public:
    AdmissibilitySearch(const Lambda& lambda, const SimpleGraph& g) : g_(g) {
        auto sorted = lambda.sorted_blocks();
        for (const auto& b : sorted) {
            if (!kinds_.empty() && kinds_.back() == b)
                ++left_.back();
            else {
                kinds_.push_back(b);
                left_.push_back(1);
            }
        }
        // BFS order per component so each vertex after the first sees an
        // already-assigned neighbour.
        const auto n = static_cast<std::size_t>(g.order());
        std::vector<char> seen(n, 0);
        for (int s = 0; s < g.order(); ++s) {
            if (seen[s]) continue;
            seen[s] = 1;
            std::size_t head = order_.size();
            order_.push_back(s);
            while (head < order_.size()) {
                const int v = order_[head++];
                for (int w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        order_.push_back(w);
                    }
            }
        }
        std::vector<int> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = static_cast<int>(i);
        earlier_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (int w : g.neighbors(order_[i]))
                if (pos[w] < static_cast<int>(i)) earlier_[i].push_back(w);
        chosen_.assign(n, -1);
    }

    std::optional<AdmissibleWitness> run() {
        stop_at_first_ = true;
        if (!place(0)) return std::nullopt;
        AdmissibleWitness w;
        w.assignment.resize(chosen_.size());
        for (std::size_t v = 0; v < chosen_.size(); ++v) w.assignment[v] = kinds_[chosen_[v]];
        return w;
    }

    /// Number of distinct admissible maps (equal blocks are indistinguishable).
    long long count() {
        stop_at_first_ = false;
        solutions_ = 0;
        place(0);
        return solutions_;
    }

private:
    const SimpleGraph& g_;
    bool stop_at_first_ = true;
    long long solutions_ = 0;
    std::vector<Block> kinds_;
    std::vector<int> left_;
    std::vector<int> order_;
    std::vector<std::vector<int>> earlier_;
    std::vector<int> chosen_;

    bool place(std::size_t i) {
        if (i == order_.size()) {
            ++solutions_;
            return stop_at_first_;
        }
        const int v = order_[i];
        for (std::size_t t = 0; t < kinds_.size(); ++t) {
            if (left_[t] == 0) continue;
            bool ok = true;
            for (int w : earlier_[i])
                if (!kinds_[t].intersects(kinds_[chosen_[w]])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            --left_[t];
            chosen_[v] = static_cast<int>(t);
            if (place(i + 1)) return true;
            ++left_[t];
        }
        chosen_[v] = -1;
        return false;
    }
};

struct ConnectedClassCatalog {
    std::mutex mutex;
    std::map<int, std::vector<std::pair<std::string, Lambda>>> by_edges;
    std::map<std::string, std::vector<WeightedForm>> admissible;

    static ConnectedClassCatalog& instance() {
        static ConnectedClassCatalog catalog;
        return catalog;
    }

    const std::vector<std::pair<std::string, Lambda>>& candidates(int edges) {
        auto it = by_edges.find(edges);
        if (it != by_edges.end()) return it->second;
        std::vector<std::pair<std::string, Lambda>> list;
        for (auto& [form, g] : enumerate_connected_multigraphs(edges))
            list.emplace_back(form.str(), Lambda::from_multigraph(g));
        return by_edges.emplace(edges, std::move(list)).first->second;
    }
};

} // namespace detail

/// Searches for a bijection V(G) -> blocks of lambda under which adjacent
/// vertices receive intersecting blocks. Exact backtracking; identical
/// blocks are treated as interchangeable.
inline std::optional<AdmissibleWitness> is_admissible(const Lambda& lambda, const SimpleGraph& g) {
    if (lambda.size() != static_cast<std::size_t>(g.order()))
        throw InvalidInput("lambda has " + std::to_string(lambda.size()) + " blocks but graph has " +
                           std::to_string(g.order()) + " vertices");
    return detail::AdmissibilitySearch(lambda, g).run();
}

/// Number of distinct bijections V(G) -> lambda (as a multiset) under which
/// adjacent vertices receive intersecting blocks.
inline long long count_admissible_maps(const Lambda& lambda, const SimpleGraph& g) {
    if (lambda.size() != static_cast<std::size_t>(g.order())) throw InvalidInput("lambda and graph sizes differ");
    return detail::AdmissibilitySearch(lambda, g).count();
}

/// Component forms of the classes admissible by a connected graph, each with
/// its number of admissible maps.
///
/// G_lambda of an admissible lambda is connected whenever G is, so for k = 2
/// the candidates are the connected multigraphs with |V(G)| edges (hence at
/// most |V(G)| + 1 symbols). For k = 1 every vertex must carry the same
/// singleton, in exactly one way. Results are memoized by canonical form.
inline std::vector<WeightedForm> admissible_component_forms(const SimpleGraph& g, int k) {
    if (k != 1 && k != 2) throw InvalidInput("block size must be 1 or 2");
    if (g.order() < 1) throw InvalidInput("empty graph");
    if (g.order() > kAdmissibleCap) throw CapExceeded("admissible class enumeration vertex count", g.order(), kAdmissibleCap);
    if (!is_connected(g)) throw InvalidInput("graph must be connected");
    if (k == 1) return {{singleton_star_form(g.order()), 1}};

    const auto canon = canonical_graph(Multigraph(g)).to_simple();
    const auto key = canonical_form(canon).str();
    auto& catalog = detail::ConnectedClassCatalog::instance();
    std::lock_guard lock(catalog.mutex);
    if (auto it = catalog.admissible.find(key); it != catalog.admissible.end()) return it->second;

    std::vector<WeightedForm> forms;
    for (const auto& [form, lambda] : catalog.candidates(canon.order()))
        if (const auto maps = count_admissible_maps(lambda, canon); maps > 0) forms.push_back({form, maps});
    catalog.admissible.emplace(key, forms);
    return forms;
}

inline std::set<PClass> enumerate_admissible_classes(const SimpleGraph& g, int k) {
    std::set<PClass> out;
    for (auto& f : admissible_component_forms(g, k)) out.insert(PClass({f.form}));
    return out;
}

/// Classes admissible by the spanning subgraph G_S, where bit i of `subset`
/// selects edge i of `g`: the product over components of G_S.
inline std::set<PClass> admissible_for_subgraph(const SimpleGraph& g, std::uint64_t subset, int k) {
    if (g.size() < 64 && (subset >> g.size()) != 0) throw InvalidInput("edge subset out of range");
    std::vector<std::vector<WeightedForm>> factors;
    for (const auto& comp : component_vertex_sets(g, subset))
        factors.push_back(admissible_component_forms(induced_subgraph(g, comp, subset), k));

    std::set<PClass> out;
    std::vector<std::size_t> pick(factors.size(), 0);
    if (std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.empty(); })) return out;
    for (;;) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < factors.size(); ++i) parts.push_back(factors[i][pick[i]].form);
        out.insert(PClass(std::move(parts)));
        std::size_t i = 0;
        while (i < factors.size() && ++pick[i] == factors[i].size()) pick[i++] = 0;
        if (i == factors.size()) break;
    }
    return out;
}

inline std::set<PClass> admissible_for_subgraph(const SimpleGraph& g, const std::vector<Edge>& subset, int k) {
    std::uint64_t mask = 0;
    for (auto e : subset) {
        if (e.u > e.v) std::swap(e.u, e.v);
        const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
        if (it == g.edges().end() || *it != e) throw InvalidInput("edge subset is not contained in E(G)");
        mask |= std::uint64_t{1} << (it - g.edges().begin());
    }
    return admissible_for_subgraph(g, mask, k);
}

} // namespace kneser
