#include <random>

#include <gtest/gtest.h>

#include "kneser/kneser.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

// a_1..a_12 of the twelve-vertex example, 0-based.
SimpleGraph example_tree() {
    return SimpleGraph(12, {{0, 1}, {0, 2}, {1, 3}, {1, 5}, {2, 6}, {2, 7}, {1, 4}, {3, 9}, {3, 8}, {7, 10}, {7, 11}});
}

} // namespace

TEST(Profile, ExampleTree) {
    const auto t = example_tree();
    EXPECT_EQ(min_degree_sequence(t).degrees, (std::vector<int>{1, 3, 1, 3, 1, 2, 4, 1, 1, 3, 1, 1}));
    EXPECT_EQ(minimum_leaves(t), (std::vector<int>{10, 11}));
}

TEST(Profile, PathStarSingleton) {
    EXPECT_EQ(min_degree_sequence(path_graph(1)).degrees, std::vector<int>{0});
    EXPECT_EQ(min_degree_sequence(path_graph(2)).degrees, (std::vector<int>{1, 1}));
    EXPECT_EQ(min_degree_sequence(path_graph(5)).degrees, (std::vector<int>{1, 2, 2, 2, 1}));
    EXPECT_EQ(minimum_leaves(path_graph(5)), (std::vector<int>{0, 4}));
    EXPECT_EQ(min_degree_sequence(star_graph(3)).degrees, (std::vector<int>{1, 3, 1, 1}));
    EXPECT_THROW(min_degree_sequence(cycle_graph(4)), NotATree);
    EXPECT_THROW(min_rooted_degree_sequence(path_graph(3), 3), InvalidInput);
}

TEST(Profile, RootedOrderIsValid) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_trees(n))
            for (int v = 0; v < n; ++v) {
                const auto [profile, order] = min_rooted_degree_sequence(t, v);
                ASSERT_EQ(profile.size(), static_cast<std::size_t>(n));
                EXPECT_EQ(order.sequence.front(), v);
                const auto pos = order.positions();
                for (int i = 1; i < n; ++i) {
                    const int w = order.sequence[i];
                    ASSERT_GE(order.parent[w], 0);
                    EXPECT_TRUE(t.has_edge(w, order.parent[w]));
                    EXPECT_LT(pos[order.parent[w]], i);
                    EXPECT_EQ(profile[i], t.degree(w));
                }
            }
}

TEST(Profile, GreedyMatchesBruteForce) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_trees(n))
            for (int v = 0; v < n; ++v)
                EXPECT_EQ(min_rooted_degree_sequence(t, v).first.degrees, oracle::brute_rooted_profile(t, v));
}

TEST(Profile, MinimumLeavesAreLeavesWithEqualProfiles) {
    for (int n = 2; n <= 9; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const auto leaves = minimum_leaves(t);
            ASSERT_FALSE(leaves.empty());
            const auto r = min_rooted_degree_sequence(t, leaves.front()).first;
            for (int v : leaves) {
                EXPECT_EQ(t.degree(v), 1);
                EXPECT_EQ(min_rooted_degree_sequence(t, v).first, r);
            }
        }
}

TEST(Profile, IsomorphismInvariant) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 9; ++n)
        for (const auto& t : enumerate_trees(n)) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(min_degree_sequence(oracle::permuted(t, perm)), min_degree_sequence(t));
        }
}
