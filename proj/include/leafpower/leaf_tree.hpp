#pragma once

// Trees whose leaves carry graph-vertex labels: the candidate k-leaf roots.
//
// A LeafTree is immutable; every surgery returns a new tree. Node ids are
// opaque integers from a monotone counter, so two trees are compared through
// their leaf-distance matrices, never through ids. Labeled nodes always have
// degree <= 1 and unlabeled nodes are never leaves; operations keep both
// invariants (delete_leaf_path prunes the unlabeled chain it exposes).

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leafpower/graph.hpp"

namespace leafpower {

using NodeId = int;
using TreeEdge = std::pair<NodeId, NodeId>;

class LeafTree {
public:
    LeafTree() = default;

    // ---- constructors ----

    static LeafTree single_leaf(Vertex label) {
        LeafTree t;
        NodeId v = t.fresh_node();
        t.set_label(v, label);
        return t;
    }

    // One center with the given labels as pendant leaves.
    static LeafTree star(const std::vector<Vertex>& labels) {
        if (labels.empty()) throw std::invalid_argument("star: no labels");
        if (labels.size() == 1) return single_leaf(labels[0]);
        LeafTree t;
        NodeId c = t.fresh_node();
        for (Vertex x : labels) {
            NodeId ell = t.fresh_node();
            t.add_edge(c, ell);
            t.set_label(ell, x);
        }
        return t;
    }

    static LeafTree from_parts(const std::vector<NodeId>& nodes,
                               const std::vector<TreeEdge>& edges,
                               const std::map<NodeId, Vertex>& labels) {
        LeafTree t;
        for (NodeId v : nodes) {
            if (t.adj_.count(v)) throw std::invalid_argument("from_parts: duplicate node");
            t.adj_[v] = {};
            t.next_id_ = std::max(t.next_id_, v + 1);
        }
        for (auto [a, b] : edges) t.add_edge(a, b);
        for (auto [v, x] : labels) t.set_label(v, x);
        t.require_valid("from_parts");
        return t;
    }

    // ---- queries ----

    int node_count() const { return static_cast<int>(adj_.size()); }
    bool has_node(NodeId v) const { return adj_.count(v) != 0; }
    NodeId next_id() const { return next_id_; }

    const std::vector<NodeId>& neighbors_of(NodeId v) const {
        return adj_.at(v);
    }

    int node_degree(NodeId v) const { return static_cast<int>(adj_.at(v).size()); }

    bool is_labeled(NodeId v) const { return label_of_.count(v) != 0; }

    Vertex label_of(NodeId v) const { return label_of_.at(v); }

    bool has_label(Vertex x) const { return node_of_.count(x) != 0; }

    NodeId leaf_node_of(Vertex x) const {
        auto it = node_of_.find(x);
        if (it == node_of_.end())
            throw std::invalid_argument("leaf_node_of: label not present");
        return it->second;
    }

    std::vector<NodeId> nodes() const {
        std::vector<NodeId> out;
        out.reserve(adj_.size());
        for (auto& [v, _] : adj_) out.push_back(v);
        return out;
    }

    std::vector<TreeEdge> edges() const {
        std::vector<TreeEdge> out;
        for (auto& [v, nbrs] : adj_)
            for (NodeId w : nbrs)
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    // Sorted list of all leaf labels.
    std::vector<Vertex> labels() const {
        std::vector<Vertex> out;
        for (auto& [x, _] : node_of_) out.push_back(x);
        return out;
    }

    // Node sequence of the unique path between two nodes (inclusive).
    std::vector<NodeId> node_path(NodeId a, NodeId b) const {
        if (!has_node(a) || !has_node(b)) throw std::invalid_argument("node_path: unknown node");
        std::map<NodeId, NodeId> prev;
        std::vector<NodeId> queue{a};
        prev[a] = a;
        for (size_t i = 0; i < queue.size(); ++i) {
            NodeId c = queue[i];
            if (c == b) break;
            for (NodeId w : adj_.at(c))
                if (!prev.count(w)) {
                    prev[w] = c;
                    queue.push_back(w);
                }
        }
        if (!prev.count(b)) throw std::logic_error("node_path: tree is disconnected");
        std::vector<NodeId> path;
        for (NodeId c = b;; c = prev[c]) {
            path.push_back(c);
            if (c == a) break;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    // Node sequence between the leaves of two labeled vertices.
    std::vector<NodeId> path_between(Vertex a, Vertex b) const {
        return node_path(leaf_node_of(a), leaf_node_of(b));
    }

    int node_distance(NodeId a, NodeId b) const {
        return static_cast<int>(node_path(a, b).size()) - 1;
    }

    // Number of edges between the leaves labeled a and b; 0 iff a == b.
    int leaf_distance(Vertex a, Vertex b) const {
        return node_distance(leaf_node_of(a), leaf_node_of(b));
    }

    // The k-leaf power of this tree. Labels must be exactly 0..n-1.
    Graph leaf_power(int k) const {
        auto labs = labels();
        int n = static_cast<int>(labs.size());
        for (int i = 0; i < n; ++i)
            if (labs[i] != i)
                throw std::invalid_argument("leaf_power: labels are not 0..n-1");
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (leaf_distance(u, v) <= k) es.emplace_back(u, v);
        return Graph(n, std::move(es));
    }

    // Leaf-distance matrix indexed by sorted label order; the tree-equality
    // notion used by tests.
    std::vector<std::vector<int>> distance_matrix() const {
        auto labs = labels();
        size_t n = labs.size();
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                m[i][j] = m[j][i] = leaf_distance(labs[i], labs[j]);
        return m;
    }

    // ---- surgeries (each returns a new tree) ----

    // Replace edge e by a path through m fresh unlabeled nodes.
    LeafTree subdivide_edge(TreeEdge e, int m) const {
        if (m < 1) throw std::invalid_argument("subdivide_edge: m must be >= 1");
        LeafTree t = *this;
        t.require_edge(e);
        t.remove_edge(e.first, e.second);
        NodeId prev = e.first;
        for (int i = 0; i < m; ++i) {
            NodeId mid = t.fresh_node();
            t.add_edge(prev, mid);
            prev = mid;
        }
        t.add_edge(prev, e.second);
        return t;
    }

    // Fresh path of `len` edges from `at`, ending in a new leaf labeled `label`.
    LeafTree attach_pendant_path(NodeId at, int len, Vertex label) const {
        if (len < 1) throw std::invalid_argument("attach_pendant_path: len must be >= 1");
        if (!has_node(at)) throw std::invalid_argument("attach_pendant_path: unknown node");
        if (has_label(label)) throw std::invalid_argument("attach_pendant_path: duplicate label");
        if (is_labeled(at) && node_degree(at) > 0)
            throw std::invalid_argument("attach_pendant_path: attachment at a labeled leaf");
        LeafTree t = *this;
        NodeId prev = at;
        for (int i = 0; i < len; ++i) {
            NodeId nxt = t.fresh_node();
            t.add_edge(prev, nxt);
            prev = nxt;
        }
        t.set_label(prev, label);
        return t;
    }

    // The pendant path of a labeled leaf: the leaf node followed by the
    // maximal chain of unlabeled degree-2 nodes above it. The last entry is
    // the anchor node that survives deletion (not part of the path).
    std::vector<NodeId> pendant_path_nodes(Vertex label) const {
        NodeId cur = leaf_node_of(label);
        std::vector<NodeId> path{cur};
        if (node_degree(cur) == 0) return path;  // single-node tree
        NodeId prev = -1;
        while (true) {
            NodeId nxt = -1;
            for (NodeId w : adj_.at(cur))
                if (w != prev) nxt = w;
            path.push_back(nxt);
            if (is_labeled(nxt) || node_degree(nxt) != 2) return path;
            prev = cur;
            cur = nxt;
        }
    }

    // Remove the labeled leaf together with its chain of unlabeled degree-2
    // ancestors, leaving no unlabeled leaf behind. Other leaf distances are
    // unchanged.
    LeafTree delete_leaf_path(Vertex label) const {
        auto path = pendant_path_nodes(label);
        if (path.size() == 1)
            throw std::invalid_argument("delete_leaf_path: tree would become empty");
        LeafTree t = *this;
        for (size_t i = 0; i + 1 < path.size(); ++i) t.remove_node(path[i]);
        // The anchor may now be an unlabeled leaf (e.g. a former degree-2
        // subdivision point whose chain was removed); prune on.
        NodeId anchor = path.back();
        while (!t.is_labeled(anchor) && t.node_degree(anchor) <= 1) {
            if (t.node_degree(anchor) == 0)
                throw std::invalid_argument("delete_leaf_path: tree would become empty");
            NodeId up = t.adj_.at(anchor)[0];
            t.remove_node(anchor);
            anchor = up;
        }
        return t;
    }

    // delete_leaf_path followed by attach_pendant_path of the same length.
    LeafTree move_pendant_path(Vertex label, NodeId new_at) const {
        auto path = pendant_path_nodes(label);
        int len = static_cast<int>(path.size()) - 1;
        LeafTree t = delete_leaf_path(label);
        if (!t.has_node(new_at))
            throw std::invalid_argument("move_pendant_path: target removed by deletion");
        return t.attach_pendant_path(new_at, len, label);
    }

    // Merge the endpoints of an internal edge; the lower node id survives.
    LeafTree contract_edge(TreeEdge e) const {
        require_edge(e);
        if (is_labeled(e.first) || is_labeled(e.second))
            throw std::invalid_argument("contract_edge: edge touches a labeled leaf");
        NodeId keep = std::min(e.first, e.second);
        NodeId gone = std::max(e.first, e.second);
        LeafTree t = *this;
        t.remove_edge(keep, gone);
        auto nbrs = t.adj_.at(gone);
        for (NodeId w : nbrs) {
            t.remove_edge(gone, w);
            t.add_edge(keep, w);
        }
        t.adj_.erase(gone);
        return t;
    }

    // ---- internal helpers shared with builders ----

    NodeId fresh_node() {
        NodeId v = next_id_++;
        adj_[v] = {};
        return v;
    }

    void add_edge(NodeId a, NodeId b) {
        if (!has_node(a) || !has_node(b)) throw std::invalid_argument("add_edge: unknown node");
        insert_sorted(adj_[a], b);
        insert_sorted(adj_[b], a);
    }

    void set_label(NodeId v, Vertex x) {
        if (!has_node(v)) throw std::invalid_argument("set_label: unknown node");
        if (node_of_.count(x)) throw std::invalid_argument("set_label: duplicate label");
        label_of_[v] = x;
        node_of_[x] = v;
    }

    // Structural validation used by tests and the tree parser.
    void require_valid(const std::string& where) const {
        if (adj_.empty()) throw std::invalid_argument(where + ": empty tree");
        size_t edge_total = 0;
        for (auto& [v, nbrs] : adj_) edge_total += nbrs.size();
        if (edge_total != 2 * (adj_.size() - 1))
            throw std::invalid_argument(where + ": edge count is not nodes-1");
        // connectivity
        std::map<NodeId, bool> seen;
        std::vector<NodeId> queue{adj_.begin()->first};
        seen[queue[0]] = true;
        for (size_t i = 0; i < queue.size(); ++i)
            for (NodeId w : adj_.at(queue[i]))
                if (!seen.count(w)) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        if (seen.size() != adj_.size())
            throw std::invalid_argument(where + ": tree is disconnected");
        for (auto& [v, nbrs] : adj_) {
            if (is_labeled(v) && nbrs.size() > 1)
                throw std::invalid_argument(where + ": labeled node with degree > 1");
            if (!is_labeled(v) && nbrs.size() <= 1)
                throw std::invalid_argument(where + ": unlabeled leaf");
        }
    }

private:
    void require_edge(TreeEdge e) const {
        if (!has_node(e.first) || !has_node(e.second))
            throw std::invalid_argument("edge endpoint not in tree");
        auto& nbrs = adj_.at(e.first);
        if (std::find(nbrs.begin(), nbrs.end(), e.second) == nbrs.end())
            throw std::invalid_argument("edge not in tree");
    }

    static void insert_sorted(std::vector<NodeId>& v, NodeId x) {
        v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    }

    void remove_edge(NodeId a, NodeId b) {
        auto& na = adj_.at(a);
        auto& nb = adj_.at(b);
        na.erase(std::find(na.begin(), na.end(), b));
        nb.erase(std::find(nb.begin(), nb.end(), a));
    }

    void remove_node(NodeId v) {
        auto nbrs = adj_.at(v);
        for (NodeId w : nbrs) remove_edge(v, w);
        adj_.erase(v);
        auto it = label_of_.find(v);
        if (it != label_of_.end()) {
            node_of_.erase(it->second);
            label_of_.erase(it);
        }
    }

    std::map<NodeId, std::vector<NodeId>> adj_;
    std::map<NodeId, Vertex> label_of_;
    std::map<Vertex, NodeId> node_of_;
    NodeId next_id_ = 0;
};

// Single tree t1 (+) t2 plus the edge a1--a2; t2's node ids are remapped
// above t1's. Cross distances are d(x,a1) + 1 + d(a2,y).
inline LeafTree join_trees(const LeafTree& t1, NodeId a1, const LeafTree& t2, NodeId a2) {
    if (!t1.has_node(a1) || !t2.has_node(a2))
        throw std::invalid_argument("join_trees: unknown anchor node");
    NodeId shift = t1.next_id();
    std::vector<NodeId> nodes;
    std::vector<TreeEdge> edges;
    std::map<NodeId, Vertex> labels;
    for (NodeId v : t1.nodes()) nodes.push_back(v);
    for (auto e : t1.edges()) edges.push_back(e);
    for (auto x : t1.labels()) labels[t1.leaf_node_of(x)] = x;
    for (NodeId v : t2.nodes()) nodes.push_back(v + shift);
    for (auto [a, b] : t2.edges()) edges.emplace_back(a + shift, b + shift);
    for (auto x : t2.labels()) {
        if (t1.has_label(x)) throw std::invalid_argument("join_trees: label collision");
        labels[t2.leaf_node_of(x) + shift] = x;
    }
    edges.emplace_back(a1, a2 + shift);
    return LeafTree::from_parts(nodes, edges, labels);
}

// The tree T0: spine c1-x1-x2-x3, every other clique vertex attached to x3
// by a pendant path of length 2, and u attached to x1 by a pendant path of
// length 4. Realizes d(c1,u)=5, d(c1,ci)=5 and d(ci,cj)=4. Labels are
// c1..ct = 0..t-1 and u = t.
inline LeafTree t0_tree(int t) {
    if (t < 2) throw std::invalid_argument("t0_tree: need t >= 2");
    LeafTree tree;
    NodeId c1 = tree.fresh_node();
    NodeId x1 = tree.fresh_node();
    NodeId x2 = tree.fresh_node();
    NodeId x3 = tree.fresh_node();
    tree.add_edge(c1, x1);
    tree.add_edge(x1, x2);
    tree.add_edge(x2, x3);
    tree.set_label(c1, 0);
    for (int i = 1; i < t; ++i) {
        NodeId mid = tree.fresh_node();
        NodeId ci = tree.fresh_node();
        tree.add_edge(x3, mid);
        tree.add_edge(mid, ci);
        tree.set_label(ci, i);
    }
    NodeId prev = x1;
    for (int step = 0; step < 4; ++step) {
        NodeId nxt = tree.fresh_node();
        tree.add_edge(prev, nxt);
        prev = nxt;
    }
    tree.set_label(prev, t);
    return tree;
}

struct VerifyResult {
    bool ok = false;
    std::optional<Edge> violation;  // first violating pair in ascending order
};

// True iff leaf_power(t, k) equals g edge-for-edge. The tree's label set
// must be exactly g's vertex set.
inline VerifyResult verify_root(const Graph& g, const LeafTree& t, int k) {
    auto labs = t.labels();
    if (static_cast<int>(labs.size()) != g.n())
        throw std::invalid_argument("verify_root: label set differs from vertex set");
    for (int i = 0; i < g.n(); ++i)
        if (labs[i] != i)
            throw std::invalid_argument("verify_root: label set differs from vertex set");
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            bool close = t.leaf_distance(u, v) <= k;
            if (close != g.has_edge(u, v)) return {false, Edge{u, v}};
        }
    return {true, std::nullopt};
}

}  // namespace leafpower
