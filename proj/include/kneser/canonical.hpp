#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kneser/error.hpp"
#include "kneser/graph.hpp"

namespace kneser {

/// Largest vertex count accepted by the canonical labeler.
inline constexpr int kCanonicalCap = 16;

/// Isomorphism-invariant serialization "n:[[u,v],...]" of a (multi)graph.
/// Repeated edges appear repeatedly; pairs are sorted.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string text) : text_(std::move(text)) {}

    const std::string& str() const noexcept { return text_; }

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

private:
    std::string text_;
};

namespace detail {

// Individualization-refinement search. Colour refinement yields an ordered
// partition whose cell order is isomorphism invariant; every discrete
// partition reachable by individualizing vertices of the first non-trivial
// cell induces a labeling, and the smallest edge list among those labelings
// is the certificate. Swapping twin vertices is an automorphism, so only one
// twin per cell is branched on.
class CanonicalLabeler {
public:
    explicit CanonicalLabeler(const Multigraph& g) : n_(g.order()) {
        if (n_ > kCanonicalCap) throw CapExceeded("canonical form vertex count", n_, kCanonicalCap);
        for (auto& row : mult_) row.fill(0);
        for (const auto& e : g.edges()) {
            if (e.mult > 255) throw InvalidInput("edge multiplicity too large");
            mult_[e.u][e.v] = mult_[e.v][e.u] = static_cast<std::uint8_t>(e.mult);
        }
    }

    /// perm[v] = canonical label of v.
    std::vector<int> run() {
        std::vector<int> colour(static_cast<std::size_t>(n_), 0);
        refine(colour);
        search(colour);
        return best_labels_;
    }

    const std::vector<std::uint8_t>& certificate() const noexcept { return best_; }

private:
    int n_;
    std::array<std::array<std::uint8_t, kCanonicalCap>, kCanonicalCap> mult_{};
    std::vector<std::uint8_t> best_;
    std::vector<int> best_labels_;
    bool have_best_ = false;

    static int rerank(std::vector<int>& colour, const std::vector<std::vector<int>>& keys) {
        const auto n = colour.size();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        int rank = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++rank;
            colour[order[i]] = rank;
        }
        return rank + 1;
    }

    void refine(std::vector<int>& colour) const {
        int cells = 1 + *std::max_element(colour.begin(), colour.end());
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n_));
        for (;;) {
            for (int v = 0; v < n_; ++v) {
                auto& key = keys[v];
                key.clear();
                key.push_back(colour[v]);
                const auto start = key.size();
                for (int u = 0; u < n_; ++u)
                    if (mult_[v][u] != 0) key.push_back(colour[u] * 256 + mult_[v][u]);
                std::sort(key.begin() + static_cast<std::ptrdiff_t>(start), key.end());
            }
            const int next = rerank(colour, keys);
            if (next == cells) return;
            cells = next;
        }
    }

    bool twins(int a, int b) const {
        for (int x = 0; x < n_; ++x)
            if (x != a && x != b && mult_[a][x] != mult_[b][x]) return false;
        return true;
    }

    void search(const std::vector<int>& colour) {
        std::vector<int> count(static_cast<std::size_t>(n_), 0);
        for (int c : colour) ++count[c];
        int target = -1;
        for (int c = 0; c < n_; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            leaf(colour);
            return;
        }
        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (colour[v] != target) continue;
            bool redundant = false;
            for (int t : tried)
                if (twins(t, v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);

            std::vector<int> next(colour);
            std::vector<std::vector<int>> keys(static_cast<std::size_t>(n_));
            for (int w = 0; w < n_; ++w) keys[w] = {colour[w] * 2 + (colour[w] == target && w != v ? 1 : 0)};
            rerank(next, keys);
            refine(next);
            search(next);
        }
    }

    void leaf(const std::vector<int>& label) {
        std::vector<std::uint8_t> cert;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                for (int m = 0; m < mult_[a][b]; ++m) {
                    const int x = std::min(label[a], label[b]);
                    const int y = std::max(label[a], label[b]);
                    cert.push_back(static_cast<std::uint8_t>(x * kCanonicalCap + y));
                }
        std::sort(cert.begin(), cert.end());
        if (!have_best_ || cert < best_) {
            best_ = std::move(cert);
            best_labels_ = label;
            have_best_ = true;
        }
    }
};

inline std::string format_edge_list(int n, const std::vector<Edge>& sorted_pairs) {
    std::string out = std::to_string(n) + ":[";
    for (std::size_t i = 0; i < sorted_pairs.size(); ++i) {
        if (i) out += ',';
        out += '[';
        out += std::to_string(sorted_pairs[i].u);
        out += ',';
        out += std::to_string(sorted_pairs[i].v);
        out += ']';
    }
    out += ']';
    return out;
}

} // namespace detail

/// perm[v] is the canonical label of vertex v.
inline std::vector<int> canonical_labeling(const Multigraph& g) {
    return detail::CanonicalLabeler(g).run();
}

/// The canonical representative: `g` relabeled by canonical_labeling.
inline Multigraph canonical_graph(const Multigraph& g) {
    const auto perm = canonical_labeling(g);
    std::vector<Edge> es;
    for (const auto& e : g.pairs()) es.push_back({perm[e.u], perm[e.v]});
    return Multigraph(g.order(), std::move(es));
}

inline CanonicalForm canonical_form(const Multigraph& g) {
    const auto canon = canonical_graph(g);
    return CanonicalForm(detail::format_edge_list(canon.order(), canon.pairs()));
}

inline CanonicalForm canonical_form(const SimpleGraph& g) { return canonical_form(Multigraph(g)); }

inline bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

/// Parses "n:[[u,v],...]" back into a multigraph.
inline Multigraph parse_edge_list(std::string_view text) {
    auto fail = [&]() -> Multigraph { throw InvalidInput("malformed edge list '" + std::string(text) + "'"); };
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return fail();
    int n = 0;
    if (std::from_chars(text.data(), text.data() + colon, n).ptr != text.data() + colon) return fail();

    std::vector<int> numbers;
    std::string_view rest = text.substr(colon + 1);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') return fail();
    const char* p = rest.data() + 1;
    const char* end = rest.data() + rest.size() - 1;
    while (p < end) {
        if (*p == '[' || *p == ']' || *p == ',') {
            ++p;
            continue;
        }
        int x = 0;
        auto [next, ec] = std::from_chars(p, end, x);
        if (ec != std::errc{}) return fail();
        numbers.push_back(x);
        p = next;
    }
    if (numbers.size() % 2 != 0) return fail();
    std::vector<Edge> es;
    for (std::size_t i = 0; i < numbers.size(); i += 2) es.push_back({numbers[i], numbers[i + 1]});
    return Multigraph(n, std::move(es));
}

} // namespace kneser
