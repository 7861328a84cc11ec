#include "leafpower/graph.hpp"

#include <gtest/gtest.h>

#include <set>

#include "leafpower/oracle.hpp"

using namespace leafpower;

namespace {

// Independent chordality oracle: every vertex subset of size >= 4 whose
// induced subgraph is a cycle refutes chordality.
bool naive_chordal(const Graph& g) {
    int n = g.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        if (vs.size() < 4) continue;
        Graph h = induced_subgraph(g, vs).graph;
        bool cyclic = h.edge_count() == h.n() && is_connected(h);
        for (int v = 0; v < h.n() && cyclic; ++v)
            if (h.degree(v) != 2) cyclic = false;
        if (cyclic) return false;
    }
    return true;
}

Graph bull() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
}

TEST(Graph, ConstructionValidation) {
    EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
    Graph g(3, {{2, 0}});
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(Chordality, SpecExamples) {
    EXPECT_FALSE(is_chordal(Graph::cycle(4)).chordal);
    EXPECT_TRUE(is_chordal(Graph::complete(4)).chordal);
    // C5 plus chords {0,2},{0,3}: a fan, chordal.
    Graph fan(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 3}});
    EXPECT_TRUE(is_chordal(fan).chordal);
    EXPECT_TRUE(naive_chordal(fan));
}

TEST(Chordality, WitnessIsAnInducedCycle) {
    for (Graph g : {Graph::cycle(4), Graph::cycle(5), Graph::cycle(6),
                    Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}})}) {
        auto res = is_chordal(g);
        ASSERT_FALSE(res.chordal);
        const auto& c = res.chordless_cycle;
        ASSERT_GE(c.size(), 4u);
        std::set<Vertex> uniq(c.begin(), c.end());
        EXPECT_EQ(uniq.size(), c.size());
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == c.size() - 1);
                EXPECT_EQ(g.has_edge(c[i], c[j]), consecutive);
            }
    }
}

TEST(Chordality, EliminationOrderCoversChordalGraph) {
    Graph g = Graph::complete(4);
    auto res = is_chordal(g);
    ASSERT_TRUE(res.chordal);
    EXPECT_EQ(res.elimination_order.size(), 4u);
}

TEST(Chordality, AgreesWithNaiveUpToSix) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            EXPECT_EQ(is_chordal(g).chordal, naive_chordal(g));
}

TEST(Chordality, NonCompleteChordalHasTwoNonadjacentSimplicials) {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            if (!is_chordal(g).chordal) continue;
            if (g.edge_count() == n * (n - 1) / 2) continue;
            auto simp = simplicial_vertices(g);
            bool found = false;
            for (size_t i = 0; i < simp.size() && !found; ++i)
                for (size_t j = i + 1; j < simp.size() && !found; ++j)
                    if (!g.has_edge(simp[i], simp[j])) found = true;
            EXPECT_TRUE(found) << "n=" << n;
        }
}

TEST(Simplicial, SpecExamples) {
    EXPECT_EQ(simplicial_vertices(Graph::path(3)), (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(simplicial_vertices(Graph::complete(3)), (std::vector<Vertex>{0, 1, 2}));
    EXPECT_TRUE(simplicial_vertices(Graph::cycle(4)).empty());
}

TEST(SimilarPairs, SpecExamples) {
    EXPECT_EQ(similar_pairs(Graph::complete(2)), (std::vector<Edge>{{0, 1}}));
    EXPECT_TRUE(similar_pairs(Graph::path(3)).empty());
    EXPECT_EQ(similar_pairs(Graph::complete(3)),
              (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(SimilarPairs, AlwaysEdges) {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            for (auto [u, v] : similar_pairs(g)) EXPECT_TRUE(g.has_edge(u, v));
}

TEST(Leaves, SpecExamples) {
    EXPECT_EQ(leaves(Graph::path(3)), (std::vector<Vertex>{0, 2}));
    EXPECT_TRUE(leaves(Graph::complete(3)).empty());
    EXPECT_EQ(leaves(Graph::star(3)), (std::vector<Vertex>{1, 2, 3}));
}

TEST(InducedSubgraph, SpecExamples) {
    auto k3 = induced_subgraph(Graph::complete(4), {1, 2, 3});
    EXPECT_EQ(k3.graph, Graph::complete(3));
    EXPECT_EQ(k3.to_original, (std::vector<Vertex>{1, 2, 3}));

    auto ends = induced_subgraph(Graph::path(4), {0, 3});
    EXPECT_EQ(ends.graph.n(), 2);
    EXPECT_EQ(ends.graph.edge_count(), 0);

    auto tri = induced_subgraph(bull(), {0, 1, 2});
    EXPECT_EQ(tri.graph, Graph::complete(3));

    EXPECT_THROW(induced_subgraph(Graph::path(3), {0, 7}), std::invalid_argument);
}

TEST(InducedSubgraph, FullVertexSetIsIdentity) {
    Graph g = bull();
    auto sub = induced_subgraph(g, {0, 1, 2, 3, 4});
    EXPECT_EQ(sub.graph, g);
    for (int v = 0; v < g.n(); ++v) EXPECT_EQ(sub.from_original[v], v);
}

TEST(Components, SpecExamples) {
    Graph g = Graph::complete(3).disjoint_union(Graph::complete(2));
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(comps[1], (std::vector<Vertex>{3, 4}));

    EXPECT_EQ(connected_components(Graph::path(5)).size(), 1u);
    EXPECT_EQ(connected_components(Graph(3, {})).size(), 3u);
}

}  // namespace
