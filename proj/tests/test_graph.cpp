#include <random>

#include <gtest/gtest.h>

#include "kneser/kneser.hpp"
#include "oracles.hpp"

using namespace kneser;

TEST(SimpleGraph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(SimpleGraph(3, {{1, 1}}), InvalidInput);
    EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), InvalidInput);
    EXPECT_THROW(SimpleGraph(3, {{0, 3}}), InvalidInput);
    SimpleGraph g(3, {{2, 0}, {0, 1}});
    EXPECT_EQ(g.size(), 2u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_FALSE(g.has_edge(1, 2));
    EXPECT_EQ(g.degree(0), 2);
}

TEST(Multigraph, AggregatesMultiplicity) {
    Multigraph g(3, {{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.has_multi_edges());
    EXPECT_FALSE(is_tree(g));
    EXPECT_THROW(g.to_simple(), InvalidInput);
    EXPECT_THROW(Multigraph(2, {{1, 1}}), InvalidInput);
}

TEST(Lambda, ComponentsAndTrees) {
    const auto lam = Lambda::pairs({{0, 1}, {5, 6}, {1, 2}, {6, 7}});
    const auto parts = connected_components(lam);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], Lambda::pairs({{0, 1}, {1, 2}}));
    EXPECT_EQ(parts[1], Lambda::pairs({{5, 6}, {6, 7}}));
    EXPECT_TRUE(is_tree(Lambda::pairs({{0, 1}, {1, 2}, {1, 3}}).to_multigraph()));
    EXPECT_FALSE(is_tree(Lambda::pairs({{0, 1}, {0, 1}}).to_multigraph()));
    EXPECT_EQ(Lambda::pairs({{0, 1}, {1, 2}}), Lambda::pairs({{1, 2}, {0, 1}}));
    EXPECT_THROW(Block::pair(3, 3), InvalidInput);

    Lambda single(1, {Block::singleton(0), Block::singleton(0), Block::singleton(4)});
    EXPECT_EQ(connected_components(single).size(), 2u);
}

TEST(IsTree, Examples) {
    EXPECT_TRUE(is_tree(path_graph(1)));
    EXPECT_TRUE(is_tree(star_graph(4)));
    EXPECT_FALSE(is_tree(cycle_graph(4)));
    EXPECT_FALSE(is_tree(SimpleGraph(3, {{0, 1}})));
}

TEST(Graph6, HandDecodedExamples) {
    EXPECT_EQ(parse_graph6("@").order(), 1);
    EXPECT_EQ(parse_graph6("A_"), SimpleGraph(2, {{0, 1}}));
    EXPECT_EQ(parse_graph6("A?"), SimpleGraph(2));
    EXPECT_EQ(parse_graph6("D?{"), SimpleGraph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), SimpleGraph(2, {{0, 1}}));
    EXPECT_EQ(write_graph6(SimpleGraph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})), "D?{");
    EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
}

TEST(Graph6, LongHeader) {
    const auto g = path_graph(70);
    const auto text = write_graph6(g);
    EXPECT_EQ(text[0], '~');
    EXPECT_EQ(parse_graph6(text), g);
}

Graph6Error::Kind kind_of(const char* text) {
    try {
        parse_graph6(text);
    } catch (const Graph6Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for " << text;
    return Graph6Error::Kind::MalformedHeader;
}

TEST(Graph6, Errors) {
    using K = Graph6Error::Kind;
    EXPECT_EQ(kind_of(""), K::MalformedHeader);
    EXPECT_EQ(kind_of("~?"), K::MalformedHeader);
    EXPECT_EQ(kind_of("D?"), K::TruncatedPayload);
    EXPECT_EQ(kind_of("A_ _"), K::InvalidCharacter);
    EXPECT_EQ(kind_of("A__"), K::TrailingData);
    EXPECT_EQ(kind_of("A`"), K::TrailingData); // padding bit set
}

TEST(Graph6, RoundTripAllTreesAndGraphs) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& t : enumerate_trees(n)) EXPECT_EQ(parse_graph6(write_graph6(t)), t);
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n)) EXPECT_EQ(parse_graph6(write_graph6(g)), g);
}

TEST(Canonical, InvariantUnderRelabeling) {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int trial = 0; trial < 3; ++trial) {
                std::shuffle(perm.begin(), perm.end(), rng);
                EXPECT_EQ(canonical_form(oracle::permuted(g, perm)), canonical_form(g));
            }
        }
}

TEST(Canonical, SeparatesClasses) {
    EXPECT_NE(canonical_form(path_graph(4)), canonical_form(star_graph(3)));
    EXPECT_EQ(canonical_form(Multigraph(2, {{0, 1}, {0, 1}})).str(), "2:[[0,1],[0,1]]");
    EXPECT_EQ(canonical_form(SimpleGraph(1)).str(), "1:[]");
    // agrees with the brute-force canonical class for every 6-vertex graph
    std::map<std::string, std::string> ours_to_brute;
    for (const auto& [key, g] : oracle::all_graphs(6)) {
        const auto ours = canonical_form(g).str();
        EXPECT_TRUE(ours_to_brute.emplace(ours, key).second) << ours;
    }
    EXPECT_EQ(ours_to_brute.size(), 156u);
}

TEST(Canonical, MultigraphFormsRoundTrip) {
    for (int e = 1; e <= 5; ++e)
        for (const auto& [form, g] : enumerate_connected_multigraphs(e)) {
            EXPECT_EQ(canonical_form(parse_edge_list(form.str())), form);
            EXPECT_EQ(g.edge_count(), e);
        }
    EXPECT_THROW(parse_edge_list("3[[0,1]]"), InvalidInput);
    EXPECT_THROW(parse_edge_list("3:[[0,1],[2]]"), InvalidInput);
    EXPECT_THROW(canonical_form(path_graph(17)), CapExceeded);
}

TEST(Enumerate, TreeCountsMatchPruferOracle) {
    const std::vector<std::size_t> known{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), known[n - 1]) << n;
    for (int n = 1; n <= 8; ++n) {
        const auto ref = oracle::prufer_trees(n);
        std::set<std::string> ours;
        for (const auto& t : enumerate_trees(n)) {
            EXPECT_TRUE(is_tree(t));
            ours.insert(oracle::tree_code(t));
        }
        std::set<std::string> theirs;
        for (const auto& [code, t] : ref) theirs.insert(code);
        EXPECT_EQ(ours, theirs) << n;
    }
}

TEST(Enumerate, GraphAndMultigraphCounts) {
    const std::vector<std::size_t> graphs{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_graphs(n).size(), graphs[n - 1]);
    const std::vector<std::size_t> multi{1, 2, 5, 12, 33, 103};
    for (int e = 1; e <= 6; ++e) EXPECT_EQ(enumerate_connected_multigraphs(e).size(), multi[e - 1]);
    EXPECT_THROW(enumerate_trees(13), CapExceeded);
}
