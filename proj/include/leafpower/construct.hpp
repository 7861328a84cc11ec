#pragma once

// Explicit leaf-root constructions:
//   - direct roots for 2- and 3-leaf powers,
//   - lift_plus_two / stretch_3_to_k (the k -> k+2 and 3 -> k subdivision
//     transformations),
//   - expand_similar (re-attachment of deleted twins),
//   - normalize_T0 (rebuilding a 5-leaf root of an H-class graph so it
//     contains the canonical subtree T0),
//   - four_to_five (every 4-leaf power with a leaf is a 5-leaf power, as a
//     terminating recursion with an oracle base case),
//   - four_to_k (chaining the above for any k >= 4).
//
// Every constructor verifies its output against the input graph before
// returning and throws structure_error if a claimed structural fact fails.
// Steps whose written justification is an existence argument fall back to a
// (filtered) oracle search and record that in the trace.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "leafpower/errors.hpp"
#include "leafpower/graph.hpp"
#include "leafpower/leaf_tree.hpp"
#include "leafpower/oracle.hpp"
#include "leafpower/recognize.hpp"

namespace leafpower {

struct ConstructionTrace {
    struct Entry {
        std::string rule;
        std::string detail;
    };
    std::vector<Entry> entries;

    void note(std::string rule, std::string detail = {}) {
        entries.push_back({std::move(rule), std::move(detail)});
    }
    bool used(std::string_view rule) const {
        for (const auto& e : entries)
            if (e.rule == rule) return true;
        return false;
    }
};

struct ConstructOptions {
    int base_case_bound = 6;  // components this small go straight to the oracle
    SearchLimits oracle_limits{};
};

// Oracle outcomes that prevent an answer surface as this error (exit code 3
// at the CLI); they must never be silently converted into a "no".
class inconclusive_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline LeafTree relabel_leaves(const LeafTree& t, const std::vector<Vertex>& new_of_old) {
    std::map<NodeId, Vertex> labels;
    for (Vertex x : t.labels()) {
        if (x < 0 || x >= static_cast<int>(new_of_old.size()))
            throw std::invalid_argument("relabel_leaves: label out of range");
        labels[t.leaf_node_of(x)] = new_of_old[x];
    }
    return LeafTree::from_parts(t.nodes(), t.edges(), labels);
}

// Anchor for joining two roots: the node next to the least leaf, or the
// lone node itself for a single-node tree.
inline NodeId join_anchor(const LeafTree& t) {
    Vertex least = t.labels().front();
    NodeId leaf = t.leaf_node_of(least);
    return t.node_degree(leaf) == 0 ? leaf : t.neighbors_of(leaf)[0];
}

// Join two roots so that every cross distance exceeds k: bridge the anchors
// with a path of length k+1.
inline LeafTree join_far(const LeafTree& a, const LeafTree& b, int k) {
    NodeId a1 = join_anchor(a);
    NodeId a2 = join_anchor(b);
    NodeId shift = a.next_id();
    LeafTree j = join_trees(a, a1, b, a2);
    return j.subdivide_edge({std::min(a1, a2 + shift), std::max(a1, a2 + shift)}, k);
}

inline LeafTree oracle_or_throw(const Graph& g, int k, const ConstructOptions& opts,
                                const char* where) {
    RootVerdict v = oracle_root(g, k, opts.oracle_limits);
    if (v.is_root()) return *v.root;
    if (v.is_noroot())
        throw structure_error(std::string(where) + ": oracle proves no " +
                              std::to_string(k) + "-leaf root exists");
    throw inconclusive_error(std::string(where) + ": oracle inconclusive (" + v.note + ")");
}

}  // namespace detail

// Root of a disjoint union of cliques: one star per clique, centers chained
// so cross-clique leaf distances are >= 3.
inline LeafTree build_2_root(const Graph& g) {
    auto r = recognize_2(g);
    if (!r.accepted) throw std::invalid_argument("build_2_root: not a 2-leaf power");
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        LeafTree t = g.n() == 1 ? LeafTree::single_leaf(0) : LeafTree::star(comps[0]);
        if (!verify_root(g, t, 2).ok) throw structure_error("build_2_root: verification failed");
        return t;
    }
    LeafTree t;
    NodeId prev = -1;
    for (const auto& comp : comps) {
        NodeId center = t.fresh_node();
        if (prev >= 0) t.add_edge(prev, center);
        for (Vertex v : comp) {
            NodeId leaf = t.fresh_node();
            t.add_edge(center, leaf);
            t.set_label(leaf, v);
        }
        prev = center;
    }
    if (!verify_root(g, t, 2).ok) throw structure_error("build_2_root: verification failed");
    return t;
}

// Root of a 3-leaf power: per component, the quotient by similar-vertex
// classes is a tree (clique substitution into trees); every class becomes a
// skeleton node carrying its members as pendant leaves. Components are
// chained through spacer nodes so cross distances are >= 4.
inline LeafTree build_3_root(const Graph& g) {
    if (!recognize_3(g).accepted)
        throw std::invalid_argument("build_3_root: not a 3-leaf power");
    if (g.n() == 1) return LeafTree::single_leaf(0);

    LeafTree t;
    NodeId prev_anchor = -1;
    for (const auto& comp : connected_components(g)) {
        // similar classes inside this component, ordered by least member
        std::vector<std::vector<Vertex>> classes;
        std::map<std::uint64_t, int> class_of_mask;
        for (Vertex v : comp) {
            auto key = g.closed_mask(v);
            auto it = class_of_mask.find(key);
            if (it == class_of_mask.end()) {
                class_of_mask.emplace(key, static_cast<int>(classes.size()));
                classes.push_back({v});
            } else {
                classes[it->second].push_back(v);
            }
        }
        size_t qedges = 0;
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j)
                if (g.has_edge(classes[i][0], classes[j][0])) ++qedges;
        if (qedges != classes.size() - 1)
            throw structure_error("build_3_root: similar-class quotient is not a tree");

        std::vector<NodeId> skel(classes.size());
        for (size_t i = 0; i < classes.size(); ++i) skel[i] = t.fresh_node();
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j)
                if (g.has_edge(classes[i][0], classes[j][0])) t.add_edge(skel[i], skel[j]);
        for (size_t i = 0; i < classes.size(); ++i)
            for (Vertex v : classes[i]) {
                NodeId leaf = t.fresh_node();
                t.add_edge(skel[i], leaf);
                t.set_label(leaf, v);
            }
        if (prev_anchor >= 0) {
            NodeId spacer = t.fresh_node();
            t.add_edge(prev_anchor, spacer);
            t.add_edge(spacer, skel[0]);
        }
        prev_anchor = skel[0];
    }
    if (!verify_root(g, t, 3).ok) throw structure_error("build_3_root: verification failed");
    return t;
}

// Subdivide the pendant edge of every leaf once: all leaf distances grow by
// exactly 2, so leaf_power(result, k+2) = leaf_power(t, k). (In the 2-node
// tree the shared edge is subdivided once per side.)
inline LeafTree lift_plus_two(const LeafTree& t, int /*k*/ = 0) {
    LeafTree out = t;
    for (Vertex x : t.labels()) {
        NodeId leaf = out.leaf_node_of(x);
        if (out.node_degree(leaf) == 0) continue;  // single-node tree
        NodeId nb = out.neighbors_of(leaf)[0];
        out = out.subdivide_edge({std::min(leaf, nb), std::max(leaf, nb)}, 1);
    }
    return out;
}

// Subdivide every non-pendant edge with k-3 new vertices: distance-2 pairs
// stay at 2 and distance-3 pairs land exactly on k. Requires the normalized
// root shape produced by build_3_root; the output is checked against
// leaf_power(t, 3) and the call fails if the shape assumption was violated.
inline LeafTree stretch_3_to_k(const LeafTree& t, int k) {
    if (k < 3) throw std::invalid_argument("stretch_3_to_k: need k >= 3");
    if (k == 3) return t;
    Graph target = t.leaf_power(3);
    LeafTree out = t;
    for (auto e : t.edges()) {
        if (t.is_labeled(e.first) || t.is_labeled(e.second)) continue;
        out = out.subdivide_edge(e, k - 3);
    }
    if (!(out.leaf_power(k) == target))
        throw structure_error("stretch_3_to_k: input was not a normalized 3-root");
    return out;
}

// Reverse the similar-vertex reduction: starting from a k-leaf root of
// red.reduced (labeled 0..m-1), re-attach each deleted twin as a new leaf on
// the neighbor of its kept partner's leaf, newest deletion first. The new
// leaf then has exactly its partner's distances (and distance 2 to it), so
// closed neighborhoods coincide. Verified against the replayed graph.
inline LeafTree expand_similar(const LeafTree& t, const SimilarReduction& red, int k) {
    if (!verify_root(red.reduced, t, k).ok)
        throw std::invalid_argument("expand_similar: tree is not a root of the reduced graph");

    LeafTree out = detail::relabel_leaves(t, red.kept_vertices);

    // replay the original graph alongside, for final verification
    std::set<Edge> edges;
    for (auto [a, b] : red.reduced.edges())
        edges.insert({std::min(red.kept_vertices[a], red.kept_vertices[b]),
                      std::max(red.kept_vertices[a], red.kept_vertices[b])});

    for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
        auto [kept, deleted] = *it;
        NodeId kl = out.leaf_node_of(kept);
        if (out.node_degree(kl) == 0) {
            // single-node tree: grow it into a 2-leaf star
            out = LeafTree::star({kept, deleted});
        } else {
            NodeId nb = out.neighbors_of(kl)[0];
            if (out.is_labeled(nb)) {
                // 2-node tree: make room for an attachment point
                out = out.subdivide_edge({std::min(kl, nb), std::max(kl, nb)}, 1);
                kl = out.leaf_node_of(kept);
                nb = out.neighbors_of(kl)[0];
            }
            out = out.attach_pendant_path(nb, 1, deleted);
        }
        std::vector<Edge> added;
        for (Edge e : edges) {
            if (e.first == kept) added.push_back({std::min(e.second, deleted),
                                                  std::max(e.second, deleted)});
            if (e.second == kept) added.push_back({std::min(e.first, deleted),
                                                   std::max(e.first, deleted)});
        }
        for (Edge e : added) edges.insert(e);
        edges.insert({std::min(kept, deleted), std::max(kept, deleted)});
    }

    int n = static_cast<int>(red.map_old_to_new.size());
    Graph original(n, std::vector<Edge>(edges.begin(), edges.end()));
    if (!verify_root(original, out, k).ok)
        throw structure_error("expand_similar: expansion failed verification");
    return out;
}

namespace detail {

// Exact containment of T0 up to the distance profile: d(c1,u) = 5,
// d(c1,ci) = 5, d(ci,cj) = 4 and d(u,ci) = 8 (u's path meets the spine next
// to c1).
inline bool t0_profile_ok(const LeafTree& t, const CalHCertificate& cert) {
    Vertex c1 = cert.clique[0];
    if (t.leaf_distance(c1, cert.leaf) != 5) return false;
    for (size_t i = 1; i < cert.clique.size(); ++i) {
        if (t.leaf_distance(c1, cert.clique[i]) != 5) return false;
        if (t.leaf_distance(cert.leaf, cert.clique[i]) != 8) return false;
        for (size_t j = i + 1; j < cert.clique.size(); ++j)
            if (t.leaf_distance(cert.clique[i], cert.clique[j]) != 4) return false;
    }
    return true;
}

// Move the branch hanging off `from` through `via` so it hangs off `to`
// instead. `to` must not lie inside the branch.
inline LeafTree reattach_branch(const LeafTree& t, NodeId from, NodeId via, NodeId to) {
    std::vector<TreeEdge> edges;
    for (auto e : t.edges()) {
        if (e == TreeEdge{std::min(from, via), std::max(from, via)})
            edges.emplace_back(std::min(to, via), std::max(to, via));
        else
            edges.push_back(e);
    }
    std::map<NodeId, Vertex> labels;
    for (Vertex x : t.labels()) labels[t.leaf_node_of(x)] = x;
    return LeafTree::from_parts(t.nodes(), edges, labels);
}

// Depth of the nearest labeled leaf inside the branch of `t` hanging off
// `exclude` through `via` (distance measured from `via`, so >= 0).
inline int branch_min_leaf_depth(const LeafTree& t, NodeId exclude, NodeId via) {
    std::map<NodeId, int> depth{{via, 0}};
    std::vector<NodeId> queue{via};
    int best = 1 << 20;
    for (size_t i = 0; i < queue.size(); ++i) {
        NodeId c = queue[i];
        if (t.is_labeled(c)) best = std::min(best, depth[c]);
        for (NodeId w : t.neighbors_of(c))
            if (w != exclude && !depth.count(w)) {
                depth[w] = depth[c] + 1;
                queue.push_back(w);
            }
    }
    return best;
}

}  // namespace detail

// Rebuild a 5-leaf root of an H-class graph so that it contains T0 exactly:
// first the leaf u (and any other leaf pendant on c1) is re-homed to a
// length-4 path on c1's neighbor, then the spine toward the farthest clique
// vertex is subdivided and the remaining clique pendants are re-homed per
// the distance case analysis (max d(c1,ci) in {3,4,5}, plus the two-vertex
// clique cases d in {3,4}). Every step is re-verified; if the surgical route
// fails on an adversarial input root, a filtered oracle search (restricted
// to T0-profile roots, which exist for every such graph) supplies the
// result and the fallback is recorded.
inline LeafTree normalize_T0(const Graph& h, const CalHCertificate& cert, const LeafTree& t,
                             const ConstructOptions& opts = {},
                             ConstructionTrace* trace = nullptr) {
    if (!cert.valid_for(h)) throw std::invalid_argument("normalize_T0: invalid certificate");
    if (!similar_pairs(h).empty())
        throw std::invalid_argument("normalize_T0: graph has similar vertices");
    if (!verify_root(h, t, 5).ok)
        throw std::invalid_argument("normalize_T0: tree is not a 5-leaf root");

    const Vertex u = cert.leaf;
    const Vertex c1 = cert.clique[0];
    const std::vector<Vertex> rest(cert.clique.begin() + 1, cert.clique.end());

    auto rehome_len4_at_c1 = [&](LeafTree tree, Vertex x) {
        LeafTree del = tree.delete_leaf_path(x);
        NodeId nc1 = del.neighbors_of(del.leaf_node_of(c1))[0];
        return del.attach_pendant_path(nc1, 4, x);
    };

    LeafTree cur = rehome_len4_at_c1(t, u);

    // other leaves of h pendant on c1 ride along with u
    std::vector<Vertex> c1_pendants{u};
    for (Vertex w : leaves(h)) {
        if (w == u || h.neighbors(w)[0] != c1) continue;
        if (std::find(cert.clique.begin(), cert.clique.end(), w) != cert.clique.end()) continue;
        cur = rehome_len4_at_c1(cur, w);
        c1_pendants.push_back(w);
    }

    for (int pass = 0; pass < 4 && !detail::t0_profile_ok(cur, cert); ++pass) {
        NodeId c1leaf = cur.leaf_node_of(c1);
        NodeId a = cur.neighbors_of(c1leaf)[0];
        if (rest.size() == 1) {
            int d = cur.leaf_distance(c1, rest[0]);
            if (d < 3 || d > 5) throw structure_error("normalize_T0: impossible clique distance");
            if (d == 5) continue;
            auto path = cur.path_between(c1, rest[0]);
            cur = cur.subdivide_edge({std::min(path[1], path[2]), std::max(path[1], path[2])},
                                     5 - d);
        } else {
            int dmax = 0;
            Vertex far = rest[0];
            for (Vertex ci : rest) {
                int d = cur.leaf_distance(c1, ci);
                if (d < 3 || d > 5)
                    throw structure_error("normalize_T0: impossible clique distance");
                if (d > dmax) {
                    dmax = d;
                    far = ci;
                }
            }
            auto far_path = cur.path_between(c1, far);  // c1leaf, a, b, [c, [d,]] farleaf
            if (dmax == 3) {
                cur = cur.subdivide_edge({std::min(c1leaf, a), std::max(c1leaf, a)}, 2);
                NodeId s1 = cur.neighbors_of(cur.leaf_node_of(c1))[0];
                for (Vertex p : c1_pendants) cur = cur.move_pendant_path(p, s1);
            } else {
                // spine prefix of the far path that every clique pendant must
                // hang from: c1,a,b (dmax 4) or c1,a,b,c (dmax 5); the target
                // attachment node x3 is its last entry
                size_t spine_len = dmax == 4 ? 3 : 4;
                NodeId x3 = far_path[spine_len - 1];
                for (Vertex ci : rest) {
                    auto p = cur.path_between(c1, ci);
                    size_t qi = 0;
                    while (qi + 1 < spine_len && qi + 1 < p.size() &&
                           p[qi + 1] == far_path[qi + 1])
                        ++qi;
                    if (qi < 1)
                        throw structure_error("normalize_T0: clique pendant in forbidden place");
                    NodeId q = p[qi];
                    int len = static_cast<int>(p.size()) - 1 - static_cast<int>(qi);
                    if (len == 1) {
                        NodeId ln = cur.leaf_node_of(ci);
                        cur = cur.subdivide_edge({std::min(q, ln), std::max(q, ln)}, 1);
                        len = 2;
                    }
                    if (len != 2)
                        throw structure_error("normalize_T0: clique pendant of bad length");
                    if (q != x3) cur = cur.move_pendant_path(ci, x3);
                }
                if (dmax == 4) {
                    auto fp = cur.path_between(c1, far);
                    cur = cur.subdivide_edge({std::min(fp[1], fp[2]), std::max(fp[1], fp[2])}, 1);
                }
            }
        }
    }

    // outboard pushes: move shallow subtrees off the spine so later
    // contractions at x1x2 cannot create false edges; each move is kept only
    // if the tree still verifies
    if (detail::t0_profile_ok(cur, cert) && verify_root(h, cur, 5).ok) {
        auto spine = cur.path_between(c1, rest[0]);  // c1leaf, x1, x2, x3, mid, leaf
        NodeId x1 = spine[1], x2 = spine[2], x3 = spine[3];
        for (NodeId q : std::vector<NodeId>(cur.neighbors_of(x2))) {
            if (q == x1 || q == x3) continue;
            if (detail::branch_min_leaf_depth(cur, x2, q) + 1 > 4) continue;
            LeafTree cand = detail::reattach_branch(cur, x2, q, x3);
            if (verify_root(h, cand, 5).ok && detail::t0_profile_ok(cand, cert)) cur = cand;
        }
        if (rest.size() == 1) {
            auto sp = cur.path_between(c1, rest[0]);
            NodeId y = sp[4];  // mid node of the single clique partner
            std::set<NodeId> keep{sp[2], y};
            for (NodeId q : std::vector<NodeId>(cur.neighbors_of(sp[3]))) {
                if (keep.count(q)) continue;
                if (detail::branch_min_leaf_depth(cur, sp[3], q) + 1 != 3) continue;
                LeafTree cand = detail::reattach_branch(cur, sp[3], q, y);
                if (verify_root(h, cand, 5).ok && detail::t0_profile_ok(cand, cert)) cur = cand;
            }
        }
    }

    if (detail::t0_profile_ok(cur, cert) && verify_root(h, cur, 5).ok) return cur;

    // Surgical route failed (adversarial input root); Lemma 1 still
    // guarantees a T0-shaped root exists, so search for one.
    if (trace) trace->note("lemma1-fallback", "surgery did not verify; filtered search");
    auto v = oracle_root_filtered(h, 5, opts.oracle_limits, [&](const LeafTree& cand) {
        return detail::t0_profile_ok(cand, cert);
    });
    if (v.is_root()) return *v.root;
    if (v.is_inconclusive())
        throw inconclusive_error("normalize_T0: filtered oracle inconclusive (" + v.note + ")");
    throw structure_error("normalize_T0: no T0-shaped root exists");
}

struct FourToFiveResult {
    LeafTree root;
    ConstructionTrace trace;
};

namespace detail {

// Recursive core of the 4-to-5 construction; G is connected and uses its own
// 0..n-1 labels. Returns a verified 5-leaf root of G.
inline LeafTree solve_five(const Graph& G, const ConstructOptions& opts,
                           ConstructionTrace& trace);

// Solve on the induced subgraph G[keep] and translate leaf labels back.
inline LeafTree solve_five_subset(const Graph& G, const std::vector<Vertex>& keep,
                                  const ConstructOptions& opts, ConstructionTrace& trace) {
    auto sub = induced_subgraph(G, keep);
    return relabel_leaves(solve_five(sub.graph, opts, trace), sub.to_original);
}

inline LeafTree verified_or_oracle(const Graph& G, LeafTree t, const ConstructOptions& opts,
                                   ConstructionTrace& trace, const char* step) {
    if (verify_root(G, t, 5).ok) return t;
    trace.note("oracle-fallback", std::string(step) + " did not verify");
    return oracle_or_throw(G, 5, opts, step);
}

inline LeafTree solve_five(const Graph& G, const ConstructOptions& opts,
                           ConstructionTrace& trace) {
    const int n = G.n();
    if (n <= opts.base_case_bound) {
        trace.note("base-oracle", "n=" + std::to_string(n));
        return oracle_or_throw(G, 5, opts, "base case");
    }

    // peel similar pairs first, re-expand afterwards
    SimilarReduction red = reduce_similar(G);
    if (!red.steps.empty()) {
        trace.note("reduce-similar", std::to_string(red.steps.size()) + " deletions");
        LeafTree t = solve_five(red.reduced, opts, trace);
        return expand_similar(t, red, 5);
    }

    auto ls = leaves(G);
    if (ls.empty()) {
        // the written argument provides no constructive route here
        trace.note("oracle-fallback", "leafless twin-free subproblem");
        return oracle_or_throw(G, 5, opts, "leafless subproblem");
    }
    const Vertex u = ls.front();
    const Vertex v1 = G.neighbors(u)[0];

    // similar pairs of G' = G - u, computed in G's labels
    std::vector<Edge> gp_sim;
    for (Vertex x = 0; x < n; ++x) {
        if (x == u) continue;
        auto mx = G.closed_mask(x) & ~(std::uint64_t{1} << u);
        for (Vertex y = x + 1; y < n; ++y) {
            if (y == u) continue;
            if (mx == (G.closed_mask(y) & ~(std::uint64_t{1} << u))) gp_sim.push_back({x, y});
        }
    }

    if (gp_sim.empty()) {
        // G - u inherits a 5-root; re-attach u on a length-4 path
        std::vector<Vertex> keep;
        for (Vertex x = 0; x < n; ++x)
            if (x != u) keep.push_back(x);
        trace.note("leaf-attach", "u=" + std::to_string(u) + " v1=" + std::to_string(v1));
        LeafTree t = solve_five_subset(G, keep, opts, trace);
        NodeId anchor = t.neighbors_of(t.leaf_node_of(v1))[0];
        return verified_or_oracle(G, t.attach_pendant_path(anchor, 4, u), opts, trace,
                                  "leaf-attach");
    }

    // the deleted leaf's neighbor must be in every similar pair, with a
    // unique partner
    Vertex v2 = -1;
    bool shape_ok = true;
    for (auto [x, y] : gp_sim) {
        Vertex partner = x == v1 ? y : y == v1 ? x : -1;
        if (partner < 0 || (v2 >= 0 && v2 != partner)) shape_ok = false;
        if (v2 < 0) v2 = partner;
    }
    if (!shape_ok || v2 < 0) {
        trace.note("oracle-fallback", "similar pairs of G-u not centered on v1");
        return oracle_or_throw(G, 5, opts, "twin structure");
    }

    // N = N(v1) \ {u, v2} splits into cliques
    std::vector<Vertex> N;
    for (Vertex w : G.neighbors(v1))
        if (w != u && w != v2) N.push_back(w);
    auto nsub = induced_subgraph(G, N);
    auto ncomps = connected_components(nsub.graph);
    bool cliques_ok = true;
    for (const auto& comp : ncomps)
        for (size_t i = 0; i < comp.size() && cliques_ok; ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!nsub.graph.has_edge(comp[i], comp[j])) {
                    cliques_ok = false;
                    break;
                }
    if (!cliques_ok || ncomps.size() > 2) {
        trace.note("oracle-fallback", "N(v1) minus {u,v2} is not one or two cliques");
        return oracle_or_throw(G, 5, opts, "N shape");
    }

    if (ncomps.size() <= 1) {
        // Case 1: N is a (possibly empty) clique. Recurse on G - v2 and
        // place v2 on a length-2 path whose anchor depends on
        // max d(v1, w) over w in N.
        std::vector<Vertex> keep;
        for (Vertex x = 0; x < n; ++x)
            if (x != v2) keep.push_back(x);
        LeafTree t = solve_five_subset(G, keep, opts, trace);
        int dmax = 0;
        Vertex wmax = -1;
        for (Vertex w : N) {
            int d = t.leaf_distance(v1, w);
            if (d > dmax) {
                dmax = d;
                wmax = w;
            }
        }
        NodeId anchor;
        if (dmax == 5)
            anchor = t.path_between(v1, wmax)[3];
        else if (dmax == 4)
            anchor = t.path_between(v1, wmax)[2];
        else
            anchor = t.neighbors_of(t.leaf_node_of(v1))[0];
        trace.note("case1", "v2=" + std::to_string(v2) + " dmax=" + std::to_string(dmax));
        return verified_or_oracle(G, t.attach_pendant_path(anchor, 2, v2), opts, trace, "case1");
    }

    // Case 2: N = N1 + N2; G - {u,v1,v2} must split into exactly two
    // components around them.
    std::vector<Vertex> others;
    for (Vertex x = 0; x < n; ++x)
        if (x != u && x != v1 && x != v2) others.push_back(x);
    auto osub = induced_subgraph(G, others);
    auto ocomps = connected_components(osub.graph);
    if (ocomps.size() != 2) {
        trace.note("oracle-fallback", "G-{u,v1,v2} does not have exactly two components");
        return oracle_or_throw(G, 5, opts, "case2 split");
    }
    std::vector<Vertex> U1, U2;
    for (Vertex v : ocomps[0]) U1.push_back(osub.to_original[v]);
    for (Vertex v : ocomps[1]) U2.push_back(osub.to_original[v]);
    std::vector<Vertex> N1, N2;
    for (Vertex w : N) {
        if (std::find(U1.begin(), U1.end(), w) != U1.end()) N1.push_back(w);
        else N2.push_back(w);
    }
    if (N1.empty() || N2.empty() ||
        static_cast<size_t>(std::count_if(N.begin(), N.end(), [&](Vertex w) {
            return std::find(U2.begin(), U2.end(), w) != U2.end();
        })) != N2.size()) {
        trace.note("oracle-fallback", "clique halves do not align with the components");
        return oracle_or_throw(G, 5, opts, "case2 alignment");
    }
    if (U1.size() == 1 || U2.size() == 1) {
        // Subcase 2.2: one side is a single vertex w1
        if (U1.size() != 1) {
            std::swap(U1, U2);
            std::swap(N1, N2);
        }
        Vertex w1 = U1[0];
        std::vector<Vertex> keep{u, v1};
        keep.insert(keep.end(), U2.begin(), U2.end());
        auto sub = induced_subgraph(G, keep);
        CalHCertificate cert;
        cert.leaf = sub.from_original[u];
        cert.clique.push_back(sub.from_original[v1]);
        for (Vertex c : N2) cert.clique.push_back(sub.from_original[c]);
        std::sort(cert.clique.begin() + 1, cert.clique.end());
        LeafTree t2 = solve_five(sub.graph, opts, trace);
        trace.note("subcase2.2", "w1=" + std::to_string(w1) + " v2=" + std::to_string(v2));
        LeafTree t2n = normalize_T0(sub.graph, cert, t2, opts, &trace);
        LeafTree back = relabel_leaves(t2n, sub.to_original);
        auto spine = back.path_between(v1, sub.to_original[cert.clique[1]]);
        LeafTree with_v2 = back.attach_pendant_path(spine[2], 2, v2);
        LeafTree full = with_v2.attach_pendant_path(spine[1], 2, w1);
        return verified_or_oracle(G, full, opts, trace, "subcase2.2");
    }

    // Subcase 2.1: both sides have >= 2 vertices. Build H1 = G[{u,v1}+U1]
    // and H2 = G[{u,v2}+U2] plus the edge u-v2, normalize both roots to
    // contain T0, then fuse: drop u's path from the H2 root, bridge the two
    // x2 spine nodes and contract both x1x2 spine edges.
    trace.note("subcase2.1", "|U1|=" + std::to_string(U1.size()) +
                                 " |U2|=" + std::to_string(U2.size()));
    std::vector<Vertex> keep1{u, v1};
    keep1.insert(keep1.end(), U1.begin(), U1.end());
    auto sub1 = induced_subgraph(G, keep1);
    CalHCertificate cert1;
    cert1.leaf = sub1.from_original[u];
    cert1.clique.push_back(sub1.from_original[v1]);
    for (Vertex c : N1) cert1.clique.push_back(sub1.from_original[c]);
    std::sort(cert1.clique.begin() + 1, cert1.clique.end());
    LeafTree t1 = solve_five(sub1.graph, opts, trace);
    LeafTree t1n = relabel_leaves(normalize_T0(sub1.graph, cert1, t1, opts, &trace),
                                  sub1.to_original);

    std::vector<Vertex> keep2{u, v2};
    keep2.insert(keep2.end(), U2.begin(), U2.end());
    auto sub2 = induced_subgraph(G, keep2);
    Graph h2 = sub2.graph.with_edge(sub2.from_original[u], sub2.from_original[v2]);
    CalHCertificate cert2;
    cert2.leaf = sub2.from_original[u];
    cert2.clique.push_back(sub2.from_original[v2]);
    for (Vertex c : N2) cert2.clique.push_back(sub2.from_original[c]);
    std::sort(cert2.clique.begin() + 1, cert2.clique.end());
    LeafTree t2 = solve_five(h2, opts, trace);
    LeafTree t2n = normalize_T0(h2, cert2, t2, opts, &trace);

    // translate H2's root back, then delete the auxiliary copy of u
    std::vector<Vertex> back2(sub2.to_original);
    LeafTree t2g = relabel_leaves(t2n, back2).delete_leaf_path(u);

    auto spine1 = t1n.path_between(v1, N1.front());
    auto spine2 = t2g.path_between(v2, N2.front());
    NodeId a1 = spine1[1], b1 = spine1[2];
    NodeId a2 = spine2[1], b2 = spine2[2];
    NodeId shift = t1n.next_id();
    LeafTree joined = join_trees(t1n, b1, t2g, b2);
    LeafTree merged = joined.contract_edge({std::min(a1, b1), std::max(a1, b1)})
                          .contract_edge({std::min(a2 + shift, b2 + shift),
                                          std::max(a2 + shift, b2 + shift)});
    return verified_or_oracle(G, merged, opts, trace, "subcase2.1");
}

}  // namespace detail

// A 5-leaf root for any 4-leaf power with at least one leaf, per the
// recursive case analysis; components are solved independently and bridged
// far apart, similar vertices are peeled first, and subproblems of at most
// base_case_bound vertices go to the oracle.
inline FourToFiveResult four_to_five(const Graph& g, const ConstructOptions& opts = {}) {
    if (!recognize_4(g).accepted)
        throw std::invalid_argument("four_to_five: not a 4-leaf power");
    if (leaves(g).empty())
        throw std::invalid_argument("four_to_five: graph has no leaf");
    ConstructionTrace trace;
    auto comps = connected_components(g);
    std::optional<LeafTree> acc;
    if (comps.size() > 1) trace.note("components", std::to_string(comps.size()));
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        LeafTree t = detail::relabel_leaves(detail::solve_five(sub.graph, opts, trace),
                                            sub.to_original);
        acc = acc ? detail::join_far(*acc, t, 5) : t;
    }
    if (!verify_root(g, *acc, 5).ok)
        throw structure_error("four_to_five: final verification failed");
    return {std::move(*acc), std::move(trace)};
}

// k-leaf root for a 4-leaf power with a leaf, k >= 4: even k lifts a 4-root,
// odd k lifts the constructed 5-root.
inline LeafTree four_to_k(const Graph& g, int k, const ConstructOptions& opts = {}) {
    if (k < 4) throw std::invalid_argument("four_to_k: need k >= 4");
    if (!recognize_4(g).accepted)
        throw std::invalid_argument("four_to_k: not a 4-leaf power");
    if (leaves(g).empty())
        throw std::invalid_argument("four_to_k: graph has no leaf");
    LeafTree t = k % 2 == 0 ? detail::oracle_or_throw(g, 4, opts, "four_to_k base")
                            : four_to_five(g, opts).root;
    for (int kk = k % 2 == 0 ? 4 : 5; kk < k; kk += 2) t = lift_plus_two(t, kk);
    if (!verify_root(g, t, k).ok)
        throw structure_error("four_to_k: verification failed");
    return t;
}

}  // namespace leafpower
