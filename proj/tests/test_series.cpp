#include <random>

#include <gtest/gtest.h>

#include "kneser/kneser.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

PClass cls(std::vector<std::string> parts) { return PClass(std::move(parts)); }

std::vector<SimpleGraph> graphs_up_to(int n_max) {
    std::vector<SimpleGraph> out;
    for (int n = 1; n <= n_max; ++n)
        for (auto& g : enumerate_graphs(n)) out.push_back(std::move(g));
    return out;
}

} // namespace

TEST(Admissible, Examples) {
    const auto k2 = complete_graph(2);
    EXPECT_TRUE(is_admissible(Lambda::pairs({{0, 1}, {1, 2}}), k2));
    EXPECT_TRUE(is_admissible(Lambda::pairs({{0, 1}, {0, 1}}), k2));
    EXPECT_FALSE(is_admissible(Lambda::pairs({{0, 1}, {2, 3}}), k2));
    EXPECT_THROW(is_admissible(Lambda::pairs({{0, 1}}), k2), InvalidInput);

    // P_3 needs the middle vertex to meet both ends
    const auto w = is_admissible(Lambda::pairs({{0, 1}, {1, 2}, {2, 3}}), path_graph(3));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->assignment[1], Block::pair(1, 2));
    EXPECT_FALSE(is_admissible(Lambda::pairs({{0, 1}, {2, 3}, {4, 5}}), path_graph(3)));

    EXPECT_EQ(count_admissible_maps(Lambda::pairs({{0, 1}, {1, 2}}), k2), 2);
    EXPECT_EQ(count_admissible_maps(Lambda::pairs({{0, 1}, {0, 1}}), k2), 1);
    EXPECT_EQ(count_admissible_maps(Lambda::pairs({{0, 1}, {1, 2}, {1, 3}}), path_graph(3)), 6);
}

TEST(Admissible, ClassesOfK2) {
    const auto got = enumerate_admissible_classes(complete_graph(2), 2);
    EXPECT_EQ(got, (std::set<PClass>{cls({"2:[[0,1],[0,1]]"}), cls({"3:[[0,2],[1,2]]"})}));
    EXPECT_EQ(enumerate_admissible_classes(path_graph(3), 1), (std::set<PClass>{cls({"1:[[0],[0],[0]]"})}));
    EXPECT_THROW(enumerate_admissible_classes(SimpleGraph(2), 2), InvalidInput);
}

TEST(Admissible, MatchesAssignmentBruteForce) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            if (!is_connected(g)) continue;
            const auto ref = oracle::brute_admissible(g);
            std::map<std::string, long long> ours;
            for (const auto& wf : admissible_component_forms(g, 2)) ours[oracle::form_key(wf.form)] = wf.maps;
            EXPECT_EQ(ours, ref) << write_graph6(g);
        }
}

TEST(Admissible, SubgraphProductForm) {
    // S = {} on K_2: two isolated vertices, each a single block
    const auto none = admissible_for_subgraph(complete_graph(2), std::uint64_t{0}, 2);
    EXPECT_EQ(none, (std::set<PClass>{cls({"2:[[0,1]]", "2:[[0,1]]"})}));
    const auto all = admissible_for_subgraph(path_graph(3), std::vector<Edge>{{1, 0}, {1, 2}}, 2);
    EXPECT_EQ(all, enumerate_admissible_classes(path_graph(3), 2));
    EXPECT_THROW(admissible_for_subgraph(path_graph(3), std::vector<Edge>{{0, 2}}, 2), InvalidInput);
}

TEST(Series, SmallExamples) {
    const auto p2 = kneser_psum(path_graph(2), 1);
    EXPECT_EQ(p2.terms.size(), 2u);
    EXPECT_EQ(p2.coefficient(cls({"1:[[0]]", "1:[[0]]"})), 1);
    EXPECT_EQ(p2.coefficient(cls({"1:[[0],[0]]"})), -1);

    const auto k1 = kneser_psum(SimpleGraph(1), 2);
    EXPECT_EQ(k1.terms.size(), 1u);
    EXPECT_EQ(k1.coefficient(cls({"2:[[0,1]]"})), 1);

    const auto k2 = kneser_psum(complete_graph(2), 2);
    EXPECT_EQ(k2.terms.size(), 3u);
    EXPECT_EQ(k2.coefficient(cls({"2:[[0,1]]", "2:[[0,1]]"})), 1);
    EXPECT_EQ(k2.coefficient(cls({"2:[[0,1],[0,1]]"})), -1);
    EXPECT_EQ(k2.coefficient(cls({"3:[[0,2],[1,2]]"})), -2);

    EXPECT_THROW(kneser_psum(path_graph(8), 2), CapExceeded);
    EXPECT_THROW(kneser_psum(path_graph(2), 3), InvalidInput);
}

TEST(Series, RelabelingInvariant) {
    std::mt19937_64 rng(3);
    for (const auto& g : graphs_up_to(5)) {
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int k : {1, 2}) EXPECT_EQ(kneser_psum(oracle::permuted(g, perm), k), kneser_psum(g, k));
    }
}

TEST(Series, EveryClassHasNBlocks) {
    for (const auto& g : graphs_up_to(5))
        for (int k : {1, 2})
            for (const auto& [c, a] : kneser_psum(g, k).terms) {
                EXPECT_EQ(class_edge_count(c), g.order());
                EXPECT_NE(a, 0);
            }
}

TEST(Evaluation, Examples) {
    EXPECT_EQ(direct_eval(complete_graph(2), BlockValues::constant(1, 1, 1)), 0u);
    EXPECT_EQ(direct_eval(SimpleGraph(1), BlockValues::constant(1, 3, 1)), 3u);
    // K_2 with k = 2, m = 4: ordered pairs of disjoint 2-subsets
    EXPECT_EQ(direct_eval(complete_graph(2), BlockValues::constant(2, 4, 1)), 6u);
    EXPECT_EQ(pseries_eval(kneser_psum(complete_graph(2), 2), BlockValues::constant(2, 4, 1)), 6u);
    EXPECT_THROW(direct_eval(SimpleGraph(1), BlockValues::constant(1, 3, 1), 15), InvalidInput);
}

TEST(Evaluation, DirectMatchesBruteForce) {
    std::mt19937_64 rng(5);
    for (const auto& g : graphs_up_to(4))
        for (int k : {1, 2})
            for (int m = k; m <= 5; ++m) {
                const auto values = BlockValues::random(k, m, kDefaultPrime, rng);
                EXPECT_EQ(direct_eval(g, values), oracle::brute_eval(g, values, kDefaultPrime))
                    << write_graph6(g) << " k=" << k << " m=" << m;
            }
}

TEST(Evaluation, SeriesMatchesDirect) {
    std::mt19937_64 rng(9);
    for (const auto& g : graphs_up_to(5))
        for (int k : {1, 2}) {
            const auto series = kneser_psum(g, k);
            for (int m = 2; m <= 6; ++m) {
                const auto values = BlockValues::random(k, m, kDefaultPrime, rng);
                EXPECT_EQ(pseries_eval(series, values), direct_eval(g, values))
                    << write_graph6(g) << " k=" << k << " m=" << m;
            }
        }
}

TEST(Evaluation, SmallPrime) {
    std::mt19937_64 rng(2);
    constexpr std::uint64_t p = 1000003;
    for (const auto& g : graphs_up_to(4)) {
        const auto values = BlockValues::random(2, 5, p, rng);
        EXPECT_EQ(pseries_eval(kneser_psum(g, 2), values, p), direct_eval(g, values, p));
        EXPECT_EQ(direct_eval(g, values, p), oracle::brute_eval(g, values, p));
    }
}

TEST(Evaluation, ChromaticPolynomial) {
    for (const auto& g : graphs_up_to(5))
        for (int m = 1; m <= 6; ++m)
            EXPECT_EQ(direct_eval(g, BlockValues::constant(1, m, 1)),
                      reduce_mod(oracle::chromatic(g, m), kDefaultPrime));
}

TEST(Series, SupportReadingsAgree) {
    for (const auto& g : graphs_up_to(5))
        for (int k : {1, 2}) EXPECT_TRUE(lambda_support(g, k).consistent()) << write_graph6(g) << " k=" << k;
}

TEST(Modular, Helpers) {
    EXPECT_TRUE(is_prime(kDefaultPrime));
    EXPECT_FALSE(is_prime(kDefaultPrime - 2));
    EXPECT_EQ(reduce_mod(-1, 7), 6u);
    EXPECT_EQ(mul_mod(kDefaultPrime - 1, kDefaultPrime - 1, kDefaultPrime), 1u);
    EXPECT_EQ(BlockValues::block_count(2, 5), 10u);
    const auto v = BlockValues::constant(2, 4, 3);
    EXPECT_EQ(v.at(Block::pair(2, 3)), 3u);
    EXPECT_THROW(v.at(Block::pair(2, 4)), InvalidInput);
}
