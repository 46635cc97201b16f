#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kneser/error.hpp"
#include "kneser/graph.hpp"

namespace kneser {

/// 2^61 - 1, a Mersenne prime.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
    return static_cast<std::uint64_t>(s % p);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

/// Reduces a signed integer into [0, p).
inline std::uint64_t reduce_mod(long long x, std::uint64_t p) {
    const auto r = static_cast<__int128>(x) % static_cast<__int128>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<__int128>(p) : r);
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (p == d) return true;
        if (p % d == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1U) r = mul_mod(r, b, p);
            b = mul_mod(b, b, p);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        auto x = pow_mod(a, d);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Residues x_B for every k-subset B of the alphabet {0, ..., m-1}.
class BlockValues {
public:
    BlockValues(int k, int m, std::vector<std::uint64_t> values) : k_(k), m_(m), values_(std::move(values)) {
        if (k != 1 && k != 2) throw InvalidInput("block size must be 1 or 2");
        if (m < k) throw InvalidInput("alphabet smaller than block size");
        if (values_.size() != block_count(k, m)) throw InvalidInput("wrong number of block values");
    }

    static std::size_t block_count(int k, int m) {
        return k == 1 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
    }

    static BlockValues constant(int k, int m, std::uint64_t value) {
        return BlockValues(k, m, std::vector<std::uint64_t>(block_count(k, m), value));
    }

    static BlockValues random(int k, int m, std::uint64_t prime, std::mt19937_64& rng) {
        std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
        std::vector<std::uint64_t> v(block_count(k, m));
        for (auto& x : v) x = dist(rng);
        return BlockValues(k, m, std::move(v));
    }

    int k() const noexcept { return k_; }
    int alphabet() const noexcept { return m_; }

    /// Blocks in index order: singletons {0},{1},... or pairs (0,1),(0,2),...,(1,2),...
    std::vector<Block> blocks() const {
        std::vector<Block> out;
        if (k_ == 1) {
            for (int a = 0; a < m_; ++a) out.push_back(Block::singleton(a));
        } else {
            for (int a = 0; a < m_; ++a)
                for (int b = a + 1; b < m_; ++b) out.push_back(Block::pair(a, b));
        }
        return out;
    }

    std::size_t index(const Block& b) const {
        if (b.size() != k_ || b.hi >= m_ || b.lo < 0) throw InvalidInput("block outside alphabet");
        if (k_ == 1) return static_cast<std::size_t>(b.lo);
        // pairs with smaller first element come first
        const auto lo = static_cast<std::size_t>(b.lo);
        const auto m = static_cast<std::size_t>(m_);
        return lo * (2 * m - lo - 1) / 2 + static_cast<std::size_t>(b.hi - b.lo - 1);
    }

    std::uint64_t operator[](std::size_t i) const { return values_[i]; }
    std::uint64_t at(const Block& b) const { return values_[index(b)]; }

private:
    int k_;
    int m_;
    std::vector<std::uint64_t> values_;
};

} // namespace kneser
