#include "leafpower/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace leafpower;

namespace {

Graph bull() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}); }
Graph dart() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}}); }
Graph gem() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

TEST(Canonical, LabelingInvariance) {
    Graph p3a = Graph::path(3);                 // 0-1-2
    Graph p3b(3, {{0, 2}, {2, 1}});             // 0-2-1
    EXPECT_EQ(canonical_form(p3a), canonical_form(p3b));
    EXPECT_NE(canonical_form(p3a), canonical_form(Graph::complete(3)));

    Graph bull2(5, {{4, 3}, {4, 2}, {3, 2}, {4, 1}, {3, 0}});  // relabeled bull
    EXPECT_EQ(canonical_form(bull()), canonical_form(bull2));
}

TEST(Enumerate, KnownClassCounts) {
    EXPECT_EQ(enumerate_graphs(1, false).size(), 1u);
    EXPECT_EQ(enumerate_graphs(2, false).size(), 2u);
    EXPECT_EQ(enumerate_graphs(3, false).size(), 4u);
    EXPECT_EQ(enumerate_graphs(4, false).size(), 11u);
    EXPECT_EQ(enumerate_graphs(5, false).size(), 34u);
    EXPECT_EQ(enumerate_graphs(6, false).size(), 156u);

    EXPECT_EQ(enumerate_graphs(1, true).size(), 1u);
    EXPECT_EQ(enumerate_graphs(3, true).size(), 2u);
    EXPECT_EQ(enumerate_graphs(4, true).size(), 6u);
    EXPECT_EQ(enumerate_graphs(5, true).size(), 21u);
    EXPECT_EQ(enumerate_graphs(6, true).size(), 112u);
}

TEST(Enumerate, DeterministicAndDistinct) {
    auto a = enumerate_graphs(5, true);
    auto b = enumerate_graphs(5, true);
    ASSERT_EQ(a.size(), b.size());
    std::set<std::string> keys;
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i], b[i]);
        keys.insert(canonical_form(a[i]));
    }
    EXPECT_EQ(keys.size(), a.size());
}

TEST(Oracle, SpecExamples) {
    auto v = oracle_root(Graph::complete(3), 2);
    ASSERT_TRUE(v.is_root());
    EXPECT_EQ(v.root->node_count(), 4);  // 3-leaf star

    EXPECT_TRUE(oracle_root(Graph::cycle(4), 5).is_noroot());

    EXPECT_TRUE(oracle_root(bull(), 3).is_noroot());
    auto b4 = oracle_root(bull(), 4);
    ASSERT_TRUE(b4.is_root());
    EXPECT_TRUE(verify_root(bull(), *b4.root, 4).ok);
}

TEST(Oracle, PathValues) {
    EXPECT_TRUE(oracle_root(Graph::path(3), 2).is_noroot());
    auto p3 = oracle_root(Graph::path(3), 3);
    ASSERT_TRUE(p3.is_root());
    EXPECT_TRUE(verify_root(Graph::path(3), *p3.root, 3).ok);
    auto p4 = oracle_root(Graph::path(4), 3);
    ASSERT_TRUE(p4.is_root());
}

TEST(Oracle, DartAndGemAreFourLeafPowersButNotThree) {
    for (const Graph& g : {dart(), gem()}) {
        EXPECT_TRUE(oracle_root(g, 3).is_noroot());
        auto v = oracle_root(g, 4);
        ASSERT_TRUE(v.is_root());
        EXPECT_TRUE(verify_root(g, *v.root, 4).ok);
    }
}

TEST(Oracle, Degenerates) {
    EXPECT_TRUE(oracle_root(Graph(1, {}), 2).is_root());
    auto k2 = oracle_root(Graph::complete(2), 3);
    ASSERT_TRUE(k2.is_root());
    auto e2 = oracle_root(Graph(2, {}), 3);
    ASSERT_TRUE(e2.is_root());
    EXPECT_EQ(e2.root->leaf_distance(0, 1), 4);
    // edgeless and disconnected inputs still get roots
    auto e3 = oracle_root(Graph(3, {}), 2);
    ASSERT_TRUE(e3.is_root());
    EXPECT_TRUE(verify_root(Graph(3, {}), *e3.root, 2).ok);
}

TEST(Oracle, MonotoneViaSubdividedRoot) {
    // A k-root lifted by subdividing every pendant edge once verifies at k+2.
    for (const Graph& g : enumerate_graphs(4, true)) {
        auto v = oracle_root(g, 3);
        if (!v.is_root()) continue;
        LeafTree lifted = *v.root;
        for (Vertex x : lifted.labels()) {
            NodeId leaf = lifted.leaf_node_of(x);
            if (lifted.node_degree(leaf) == 0) continue;
            NodeId nb = lifted.neighbors_of(leaf)[0];
            lifted = lifted.subdivide_edge({std::min(leaf, nb), std::max(leaf, nb)}, 1);
        }
        EXPECT_TRUE(verify_root(g, lifted, 5).ok);
    }
}

TEST(Oracle, InconclusiveOnTinyBudgetNeverNoRoot) {
    SearchLimits lim;
    lim.budget_seconds = 1e-9;
    Graph g = enumerate_graphs(6, true).back();
    auto v = oracle_root(g, 4, lim);
    EXPECT_TRUE(v.is_root() || v.is_inconclusive());
}

TEST(Oracle, InconclusiveWhenWeightCapBelowK) {
    SearchLimits lim;
    lim.max_edge_weight = 2;
    // P3 needs weight >= 2 on outer edges at k=3; with cap 2 a root still
    // exists, but a NoRoot claim would be unsound for graphs needing more.
    auto v = oracle_root(Graph(3, {{0, 1}}), 4, lim);
    EXPECT_FALSE(v.is_noroot());
}

TEST(Oracle, RootVerdictAlwaysVerifies) {
    for (const Graph& g : enumerate_graphs(5, true))
        for (int k : {2, 3, 4}) {
            auto v = oracle_root(g, k);
            ASSERT_FALSE(v.is_inconclusive());
            if (v.is_root()) EXPECT_TRUE(verify_root(g, *v.root, k).ok);
        }
}

TEST(Oracle, FilteredSearchHonorsPredicate) {
    // Ask for a 3-root of P3 where the two end vertices sit at distance 4.
    Graph p3 = Graph::path(3);
    auto v = oracle_root_filtered(p3, 3, SearchLimits{},
                                  [](const LeafTree& t) { return t.leaf_distance(0, 2) == 4; });
    ASSERT_TRUE(v.is_root());
    EXPECT_EQ(v.root->leaf_distance(0, 2), 4);
    EXPECT_TRUE(verify_root(p3, *v.root, 3).ok);
}

}  // namespace
