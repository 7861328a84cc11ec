#include "leafpower/leaf_tree.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace leafpower;

namespace {

// Random tree with every leaf labeled; at most `max_leaves` leaves.
LeafTree random_tree(std::mt19937& rng, int max_leaves = 8) {
    while (true) {
        int total = 1 + static_cast<int>(rng() % 14);
        std::vector<int> parent(total, -1);
        std::vector<int> degree(total, 0);
        for (int i = 1; i < total; ++i) {
            parent[i] = static_cast<int>(rng() % i);
            ++degree[i];
            ++degree[parent[i]];
        }
        std::vector<NodeId> nodes;
        std::vector<TreeEdge> edges;
        std::map<NodeId, Vertex> labels;
        int next_label = 0;
        for (int i = 0; i < total; ++i) nodes.push_back(i);
        for (int i = 1; i < total; ++i) edges.emplace_back(parent[i], i);
        for (int i = 0; i < total; ++i)
            if (degree[i] <= 1) labels[i] = next_label++;
        if (next_label > max_leaves) continue;
        return LeafTree::from_parts(nodes, edges, labels);
    }
}

TreeEdge pendant_edge_of(const LeafTree& t, Vertex x) {
    NodeId leaf = t.leaf_node_of(x);
    NodeId nb = t.neighbors_of(leaf)[0];
    return {std::min(leaf, nb), std::max(leaf, nb)};
}

TEST(LeafDistance, SpecExamples) {
    LeafTree star = LeafTree::star({0, 1, 2});
    EXPECT_EQ(star.leaf_distance(0, 1), 2);
    EXPECT_EQ(star.leaf_distance(1, 1), 0);

    LeafTree t0 = t0_tree(3);  // labels: c1=0, c2=1, c3=2, u=3
    EXPECT_EQ(t0.leaf_distance(0, 3), 5);
    EXPECT_EQ(t0.leaf_distance(1, 2), 4);
    EXPECT_EQ(t0.leaf_distance(0, 1), 5);

    EXPECT_THROW(star.leaf_distance(0, 9), std::invalid_argument);
}

TEST(T0Tree, DistanceProfile) {
    for (int t = 2; t <= 5; ++t) {
        LeafTree tree = t0_tree(t);
        EXPECT_EQ(tree.leaf_distance(0, t), 5);
        for (int i = 1; i < t; ++i) {
            EXPECT_EQ(tree.leaf_distance(0, i), 5);
            EXPECT_EQ(tree.leaf_distance(i, t), 8);
            for (int j = i + 1; j < t; ++j) EXPECT_EQ(tree.leaf_distance(i, j), 4);
        }
    }
    EXPECT_THROW(t0_tree(1), std::invalid_argument);
}

TEST(LeafPower, SpecExamples) {
    EXPECT_EQ(LeafTree::star({0, 1, 2}).leaf_power(2), Graph::complete(3));

    // path leaf-x-y-leaf: leaf distance 3
    LeafTree p = LeafTree::single_leaf(0).attach_pendant_path(0, 3, 1);
    EXPECT_EQ(p.leaf_power(2), Graph(2, {}));
    EXPECT_EQ(p.leaf_power(3), Graph::complete(2));

    // t0_tree(3) at k=5: clique {0,1,2} plus pendant 3 adjacent only to 0
    Graph got = t0_tree(3).leaf_power(5);
    EXPECT_EQ(got, Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));

    // t0_tree(2) at k=5: path u(2) - c1(0) - c2(1), u and c2 nonadjacent
    EXPECT_EQ(t0_tree(2).leaf_power(5), Graph(3, {{0, 1}, {0, 2}}));
}

TEST(LeafPower, MonotoneInK) {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        LeafTree t = random_tree(rng);
        for (int k = 2; k <= 6; ++k) {
            Graph a = t.leaf_power(k), b = t.leaf_power(k + 1);
            for (auto e : a.edges()) EXPECT_TRUE(b.has_edge(e.first, e.second));
        }
    }
}

TEST(VerifyRoot, SpecExamples) {
    LeafTree star = LeafTree::star({0, 1, 2});
    EXPECT_TRUE(verify_root(Graph::complete(3), star, 2).ok);
    auto bad = verify_root(Graph::complete(3), star, 1);
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(*bad.violation, (Edge{0, 1}));

    Graph h(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    EXPECT_TRUE(verify_root(h, t0_tree(3), 5).ok);

    EXPECT_THROW(verify_root(Graph::complete(4), star, 2), std::invalid_argument);
}

TEST(SubdivideEdge, SpecExamples) {
    LeafTree k2root = LeafTree::star({0, 1});
    EXPECT_EQ(k2root.leaf_distance(0, 1), 2);
    LeafTree longer = k2root.subdivide_edge(pendant_edge_of(k2root, 0), 1);
    EXPECT_EQ(longer.leaf_distance(0, 1), 3);

    // m=2 on a spine edge of t0_tree(2): c1-x1 edge is (0,1) by construction
    LeafTree t0 = t0_tree(2);
    LeafTree stretched = t0.subdivide_edge({0, 1}, 2);
    EXPECT_EQ(stretched.leaf_distance(0, 1), 7);

    EXPECT_THROW(t0.subdivide_edge({0, 3}, 1), std::invalid_argument);
}

TEST(SubdivideEdge, EveryPendantOncePlusTwoOnRandomTrees) {
    std::mt19937 rng(11);
    for (int it = 0; it < 100; ++it) {
        LeafTree t = random_tree(rng);
        auto labs = t.labels();
        if (labs.size() < 2) continue;
        auto before = t.distance_matrix();
        LeafTree s = t;
        for (Vertex x : labs)
            s = s.subdivide_edge(pendant_edge_of(s, x), 1);
        auto after = s.distance_matrix();
        // one subdivision per leaf: every leaf pair gains exactly 2
        for (size_t i = 0; i < labs.size(); ++i)
            for (size_t j = i + 1; j < labs.size(); ++j)
                EXPECT_EQ(after[i][j], before[i][j] + 2);
    }
}

TEST(SubdivideEdge, OffPathDistanceUnchanged) {
    LeafTree t0 = t0_tree(3);
    // subdividing u's chain does not change (c2,c3)
    NodeId uleaf = t0.leaf_node_of(3);
    NodeId prev = t0.neighbors_of(uleaf)[0];
    LeafTree s = t0.subdivide_edge({std::min(uleaf, prev), std::max(uleaf, prev)}, 3);
    EXPECT_EQ(s.leaf_distance(1, 2), 4);
    EXPECT_EQ(s.leaf_distance(0, 3), 8);
}

TEST(AttachPendantPath, SpecExamples) {
    LeafTree two = LeafTree::star({0, 1});
    NodeId center = two.path_between(0, 1)[1];
    LeafTree three = two.attach_pendant_path(center, 1, 2);
    EXPECT_EQ(three.distance_matrix(), LeafTree::star({0, 1, 2}).distance_matrix());

    // attach u with len 4 at the neighbor of c1 gives d(u,c1) = 5
    LeafTree t0 = t0_tree(2);
    NodeId nc1 = t0.neighbors_of(t0.leaf_node_of(0))[0];
    LeafTree withv = t0.attach_pendant_path(nc1, 4, 9);
    EXPECT_EQ(withv.leaf_distance(0, 9), 5);
    // distances among pre-existing leaves unchanged
    EXPECT_EQ(withv.leaf_distance(0, 1), 5);
    EXPECT_EQ(withv.leaf_distance(0, 2), 5);

    EXPECT_THROW(t0.attach_pendant_path(nc1, 1, 1), std::invalid_argument);
    EXPECT_THROW(t0.attach_pendant_path(999, 1, 9), std::invalid_argument);
}

TEST(DeleteLeafPath, SpecExamples) {
    LeafTree three = LeafTree::star({0, 1, 2});
    LeafTree two = three.delete_leaf_path(2);
    EXPECT_EQ(two.labels(), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(two.leaf_distance(0, 1), 2);

    LeafTree t0 = t0_tree(2);
    LeafTree no_u = t0.delete_leaf_path(2);  // u = 2 for t=2
    EXPECT_EQ(no_u.leaf_distance(0, 1), 5);

    EXPECT_THROW(LeafTree::single_leaf(0).delete_leaf_path(0), std::invalid_argument);
    EXPECT_THROW(three.delete_leaf_path(9), std::invalid_argument);
}

TEST(DeleteLeafPath, NoUnlabeledLeafRemains) {
    std::mt19937 rng(23);
    for (int it = 0; it < 100; ++it) {
        LeafTree t = random_tree(rng);
        auto labs = t.labels();
        if (labs.size() < 2) continue;
        LeafTree d = t.delete_leaf_path(labs[0]);
        EXPECT_NO_THROW(d.require_valid("after delete"));
    }
}

TEST(AttachDeleteInverse, LeafPowerUnchanged) {
    std::mt19937 rng(37);
    for (int it = 0; it < 60; ++it) {
        LeafTree t = random_tree(rng, 6);
        auto labs = t.labels();
        Vertex fresh = static_cast<Vertex>(labs.size());
        auto nodes = t.nodes();
        NodeId at = nodes[rng() % nodes.size()];
        if (t.is_labeled(at) && t.node_degree(at) > 0) continue;
        int len = 1 + static_cast<int>(rng() % 3);
        LeafTree added = t.attach_pendant_path(at, len, fresh);
        LeafTree back = added.delete_leaf_path(fresh);
        for (int k = 2; k <= 5; ++k)
            EXPECT_EQ(back.leaf_power(k), t.leaf_power(k));
    }
}

TEST(MovePendantPath, SpecExamples) {
    // moving to its current attachment point leaves every leaf power unchanged
    LeafTree t0 = t0_tree(2);
    auto upath = t0.pendant_path_nodes(2);
    NodeId anchor = upath.back();
    LeafTree moved = t0.move_pendant_path(2, anchor);
    EXPECT_EQ(moved.distance_matrix(), t0.distance_matrix());

    // after moving u's length-4 path to c1's neighbor, d(u,c1) = 5
    LeafTree shifted = t0.move_pendant_path(2, t0.neighbors_of(t0.leaf_node_of(0))[0]);
    EXPECT_EQ(shifted.leaf_distance(0, 2), 5);

    // equivalence with delete-then-attach
    NodeId nc2 = t0.neighbors_of(t0.leaf_node_of(1))[0];
    LeafTree a = t0.move_pendant_path(2, nc2);
    LeafTree b = t0.delete_leaf_path(2).attach_pendant_path(nc2, 4, 2);
    EXPECT_EQ(a.distance_matrix(), b.distance_matrix());
}

TEST(ContractEdge, SpecExamples) {
    LeafTree t0 = t0_tree(2);
    // spine edge x1-x2 is (1,2) by construction
    LeafTree c = t0.contract_edge({1, 2});
    EXPECT_EQ(c.leaf_distance(0, 1), 4);
    EXPECT_EQ(c.labels(), t0.labels());

    // subdivide then contract the new edge restores distances
    LeafTree s = t0.subdivide_edge({1, 2}, 1);
    NodeId mid = -1;
    for (NodeId v : s.nodes())
        if (!t0.has_node(v)) mid = v;
    LeafTree back = s.contract_edge({1, mid});
    EXPECT_EQ(back.distance_matrix(), t0.distance_matrix());

    // leaf edges cannot be contracted
    EXPECT_THROW(t0.contract_edge({0, 1}), std::invalid_argument);
}

TEST(JoinTrees, SpecExamples) {
    LeafTree left = LeafTree::star({0, 1});
    LeafTree right = LeafTree::star({2, 3});
    NodeId ca = left.path_between(0, 1)[1];
    NodeId cb = right.path_between(2, 3)[1];
    LeafTree joined = join_trees(left, ca, right, cb);
    EXPECT_EQ(joined.leaf_distance(0, 2), 3);  // 1 + 1 + 1
    EXPECT_EQ(joined.leaf_distance(0, 1), 2);

    EXPECT_THROW(join_trees(left, ca, left, ca), std::invalid_argument);
}

TEST(JoinTrees, CrossDistanceFormula) {
    std::mt19937 rng(53);
    for (int it = 0; it < 40; ++it) {
        LeafTree t1 = random_tree(rng, 4);
        LeafTree t2raw = random_tree(rng, 4);
        // shift t2 labels above t1's
        int shift = static_cast<int>(t1.labels().size());
        std::vector<NodeId> nodes = t2raw.nodes();
        std::vector<TreeEdge> edges = t2raw.edges();
        std::map<NodeId, Vertex> labels;
        for (Vertex x : t2raw.labels()) labels[t2raw.leaf_node_of(x)] = x + shift;
        LeafTree t2 = LeafTree::from_parts(nodes, edges, labels);

        auto n1 = t1.nodes();
        auto n2 = t2.nodes();
        NodeId a1 = n1[rng() % n1.size()];
        NodeId a2 = n2[rng() % n2.size()];
        if ((t1.is_labeled(a1) && t1.node_degree(a1) > 0) ||
            (t2.is_labeled(a2) && t2.node_degree(a2) > 0))
            continue;  // joining at a leaf would break the leaf invariant
        LeafTree j = join_trees(t1, a1, t2, a2);
        for (Vertex x : t1.labels())
            for (Vertex y : t2.labels())
                EXPECT_EQ(j.leaf_distance(x, y),
                          t1.node_distance(t1.leaf_node_of(x), a1) + 1 +
                              t2.node_distance(a2, t2.leaf_node_of(y)));
    }
}

TEST(Invariants, SurgeriesPreserveValidity) {
    std::mt19937 rng(71);
    for (int it = 0; it < 80; ++it) {
        LeafTree t = random_tree(rng);
        EXPECT_NO_THROW(t.require_valid("random"));
        auto edges = t.edges();
        if (!edges.empty()) {
            LeafTree s = t.subdivide_edge(edges[rng() % edges.size()], 1 + rng() % 2);
            EXPECT_NO_THROW(s.require_valid("subdivide"));
        }
    }
}

}  // namespace
