#pragma once

// graph6 encoding (B. McKay's format as used by nauty): a size header
// followed by the upper triangle of the adjacency matrix in column-major
// order, packed six bits per printable byte offset by 63.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kneser/error.hpp"
#include "kneser/graph.hpp"

namespace kneser {

class Graph6Error : public InvalidInput {
public:
    enum class Kind { MalformedHeader, TruncatedPayload, InvalidCharacter, TrailingData };

    Graph6Error(Kind kind, const std::string& what) : InvalidInput("graph6: " + what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

namespace detail {

inline constexpr int kGraph6Offset = 63;
inline constexpr int kGraph6Max = 126;

inline void append_graph6_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kGraph6Max));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Offset));
    } else {
        out.push_back(static_cast<char>(kGraph6Max));
        out.push_back(static_cast<char>(kGraph6Max));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + kGraph6Offset));
    }
}

} // namespace detail

/// Decodes one graph6 line. A leading ">>graph6<<" marker and trailing
/// whitespace are tolerated.
inline SimpleGraph parse_graph6(std::string_view text) {
    using K = Graph6Error::Kind;
    constexpr std::string_view marker = ">>graph6<<";
    if (text.substr(0, marker.size()) == marker) text.remove_prefix(marker.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty()) throw Graph6Error(K::MalformedHeader, "empty input");

    for (std::size_t i = 0; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < detail::kGraph6Offset || c > detail::kGraph6Max)
            throw Graph6Error(K::InvalidCharacter,
                              "byte " + std::to_string(c) + " at offset " + std::to_string(i) + " is outside 63..126");
    }

    auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - 63); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    } else if (text.size() >= 2 && value(1) < 63) {
        if (text.size() < 4) throw Graph6Error(K::MalformedHeader, "short 4-byte size header");
        n = value(1) << 12 | value(2) << 6 | value(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw Graph6Error(K::MalformedHeader, "short 8-byte size header");
        for (std::size_t i = 2; i < 8; ++i) n = n << 6 | value(i);
        pos = 8;
    }
    if (n > 100000) throw Graph6Error(K::MalformedHeader, "vertex count " + std::to_string(n) + " is unreasonably large");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    const std::uint64_t have = text.size() - pos;
    if (have < bytes)
        throw Graph6Error(K::TruncatedPayload,
                          "expected " + std::to_string(bytes) + " payload bytes, found " + std::to_string(have));
    if (have > bytes) throw Graph6Error(K::TrailingData, "unexpected bytes after payload");

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const auto byte = value(pos + bit / 6);
            if (byte >> (5 - bit % 6) & 1U) edges.push_back({i, j});
        }
    }
    // Padding bits must be zero.
    for (; bit < bytes * 6; ++bit)
        if (value(pos + bit / 6) >> (5 - bit % 6) & 1U)
            throw Graph6Error(K::TrailingData, "non-zero padding bits");
    return SimpleGraph(static_cast<int>(n), std::move(edges));
}

inline std::string write_graph6(const SimpleGraph& g) {
    std::string out;
    const auto n = static_cast<std::uint64_t>(g.order());
    detail::append_graph6_size(out, n);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<unsigned char> packed((bits + 5) / 6, 0);
    for (const auto& e : g.edges()) {
        // column-major position of (u, v), u < v
        const auto b = static_cast<std::uint64_t>(e.v) * static_cast<std::uint64_t>(e.v - 1) / 2 + static_cast<std::uint64_t>(e.u);
        packed[b / 6] |= static_cast<unsigned char>(1U << (5 - b % 6));
    }
    for (auto c : packed) out.push_back(static_cast<char>(c + detail::kGraph6Offset));
    return out;
}

} // namespace kneser
