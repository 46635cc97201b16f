#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneser/error.hpp"
#include "kneser/graph.hpp"
#include "kneser/modular.hpp"
#include "kneser/pclass.hpp"
#include "kneser/psum.hpp"

namespace kneser {

namespace detail {

inline void check_prime(std::uint64_t p) {
    if (p < 2 || p > (std::uint64_t{1} << 62) || !is_prime(p)) throw InvalidInput("modulus is not a usable prime");
}

class HomomorphismSum {
public:
    HomomorphismSum(const SimpleGraph& g, const BlockValues& values, std::uint64_t p)
        : g_(g), p_(p), blocks_(values.blocks()) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) value_.push_back(values[i] % p);
        const auto nb = blocks_.size();
        disjoint_.assign(nb * nb, 0);
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = 0; b < nb; ++b) disjoint_[a * nb + b] = !blocks_[a].intersects(blocks_[b]);
    }

    std::uint64_t run() {
        std::uint64_t total = 1 % p_;
        for (const auto& comp : component_vertex_sets(g_)) {
            order_.clear();
            earlier_.clear();
            // BFS inside the component
            std::vector<int> pos(static_cast<std::size_t>(g_.order()), -1);
            order_.push_back(comp.front());
            pos[comp.front()] = 0;
            for (std::size_t head = 0; head < order_.size(); ++head)
                for (int w : g_.neighbors(order_[head]))
                    if (pos[w] < 0) {
                        pos[w] = static_cast<int>(order_.size());
                        order_.push_back(w);
                    }
            earlier_.resize(order_.size());
            for (std::size_t i = 0; i < order_.size(); ++i)
                for (int w : g_.neighbors(order_[i]))
                    if (pos[w] < static_cast<int>(i)) earlier_[i].push_back(pos[w]);
            chosen_.assign(order_.size(), 0);
            total = mul_mod(total, sum_from(0), p_);
        }
        return total;
    }

private:
    const SimpleGraph& g_;
    std::uint64_t p_;
    std::vector<Block> blocks_;
    std::vector<std::uint64_t> value_;
    std::vector<char> disjoint_;
    std::vector<int> order_;
    std::vector<std::vector<int>> earlier_;
    std::vector<std::size_t> chosen_;

    std::uint64_t sum_from(std::size_t i) {
        if (i == order_.size()) return 1 % p_;
        const auto nb = blocks_.size();
        std::uint64_t sum = 0;
        for (std::size_t b = 0; b < nb; ++b) {
            bool ok = true;
            for (int j : earlier_[i])
                if (!disjoint_[b * nb + chosen_[j]]) {
                    ok = false;
                    break;
                }
            if (!ok || value_[b] == 0) continue;
            chosen_[i] = b;
            sum = add_mod(sum, mul_mod(value_[b], sum_from(i + 1), p_), p_);
        }
        return sum;
    }
};

/// |Aut| of the block multiset: symbol permutations fixing it.
inline std::uint64_t automorphism_count(const Lambda& part) {
    static std::mutex mutex;
    static std::map<std::vector<Block>, std::uint64_t> memo;
    const auto key = part.sorted_blocks();
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const auto base = part.base();
    std::vector<int> perm(base.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto index = [&](int x) { return static_cast<std::size_t>(std::lower_bound(base.begin(), base.end(), x) - base.begin()); };
    std::uint64_t count = 0;
    do {
        std::vector<Block> image;
        image.reserve(key.size());
        for (const auto& b : key) {
            const int x = base[static_cast<std::size_t>(perm[index(b.lo)])];
            const int y = base[static_cast<std::size_t>(perm[index(b.hi)])];
            image.push_back(x <= y ? Block{x, y} : Block{y, x});
        }
        std::sort(image.begin(), image.end());
        if (image == key) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::lock_guard lock(mutex);
    memo.emplace(key, count);
    return count;
}

/// Sum of x-monomials over the S_N orbit of one connected component,
/// restricted to the alphabet of `values`. Distinct images are summed once
/// each; the number of injective labelings must equal |Aut| times the orbit
/// size.
inline std::uint64_t component_orbit_sum(const std::string& form, const BlockValues& values, std::uint64_t p) {
    const auto part = lambda_from_form(form);
    const auto base = part.base();
    const int m = values.alphabet();
    const auto b = base.size();
    if (b > static_cast<std::size_t>(m)) return 0;

    std::map<std::vector<std::size_t>, std::uint64_t> images;
    std::uint64_t labelings = 0;
    std::vector<int> image(b, -1);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    auto index = [&](int x) { return static_cast<std::size_t>(std::lower_bound(base.begin(), base.end(), x) - base.begin()); };

    auto visit = [&](auto&& self, std::size_t i) -> void {
        if (i == b) {
            ++labelings;
            std::vector<std::size_t> key;
            key.reserve(part.size());
            std::uint64_t prod = 1 % p;
            for (const auto& blk : part.blocks()) {
                const int x = image[index(blk.lo)];
                const int y = image[index(blk.hi)];
                const Block mapped = part.k() == 1 ? Block::singleton(x) : Block::pair(x, y);
                const auto idx = values.index(mapped);
                key.push_back(idx);
                prod = mul_mod(prod, values[idx] % p, p);
            }
            std::sort(key.begin(), key.end());
            images.emplace(std::move(key), prod);
            return;
        }
        for (int s = 0; s < m; ++s) {
            if (used[s]) continue;
            used[s] = 1;
            image[i] = s;
            self(self, i + 1);
            used[s] = 0;
        }
    };
    visit(visit, 0);

    const auto aut = automorphism_count(part);
    if (labelings != aut * images.size())
        throw std::logic_error("orbit of " + form + ": " + std::to_string(labelings) +
                               " labelings is not |Aut| = " + std::to_string(aut) + " times " +
                               std::to_string(images.size()) + " images");
    std::uint64_t sum = 0;
    for (const auto& [key, prod] : images) sum = add_mod(sum, prod, p);
    return sum;
}

} // namespace detail

/// Sum over proper Kneser colourings phi: V(G) -> k-subsets of {0..m-1}
/// (adjacent vertices get disjoint blocks) of the product of x_{phi(v)},
/// reduced mod p. Connected components are summed independently.
inline std::uint64_t direct_eval(const SimpleGraph& g, const BlockValues& values, std::uint64_t p = kDefaultPrime) {
    detail::check_prime(p);
    return detail::HomomorphismSum(g, values, p).run();
}

/// Evaluates a power-sum series at the same finite specialization: each p
/// is the product of its components' orbit sums.
inline std::uint64_t pseries_eval(const PSeries& series, const BlockValues& values, std::uint64_t p = kDefaultPrime) {
    detail::check_prime(p);
    if (series.k != values.k()) throw InvalidInput("series and value map use different block sizes");
    std::map<std::string, std::uint64_t> orbit;
    std::uint64_t total = 0;
    for (const auto& [cls, coeff] : series.terms) {
        std::uint64_t term = reduce_mod(coeff, p);
        for (const auto& f : cls.components) {
            auto it = orbit.find(f);
            if (it == orbit.end()) it = orbit.emplace(f, detail::component_orbit_sum(f, values, p)).first;
            term = mul_mod(term, it->second, p);
            if (term == 0) break;
        }
        total = add_mod(total, term, p);
    }
    return total;
}

} // namespace kneser
