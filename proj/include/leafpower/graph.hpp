#pragma once

// Finite simple undirected graphs on vertices 0..n-1, plus the structural
// predicates used throughout the library: chordality (with certificates in
// both directions), simplicial vertices, similar vertices (true twins),
// leaves, induced subgraphs and connected components.
//
// Graphs are immutable values. Vertex count is capped at 64 so neighborhoods
// fit in one machine word; everything here is desk-scale by design.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leafpower {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() : n_(0) {}

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range");
        adj_.assign(static_cast<size_t>(n), 0);
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop");
            if (adj_[u] >> v & 1) throw std::invalid_argument("Graph: duplicate edge");
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
        }
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[u] >> v & 1);
    }

    int degree(Vertex v) const {
        check_vertex(v);
        return popcount(adj_[v]);
    }

    // Open neighborhood as a bitmask.
    std::uint64_t neighbor_mask(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    // Closed neighborhood N[v] as a bitmask.
    std::uint64_t closed_mask(Vertex v) const {
        check_vertex(v);
        return adj_[v] | std::uint64_t{1} << v;
    }

    std::vector<Vertex> neighbors(Vertex v) const { return mask_to_vertices(neighbor_mask(v)); }

    // New graph with one extra edge.
    Graph with_edge(Vertex u, Vertex v) const {
        auto es = edges_;
        es.emplace_back(u, v);
        return Graph(n_, std::move(es));
    }

    static std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
        std::vector<Vertex> out;
        for (int v = 0; mask; ++v, mask >>= 1)
            if (mask & 1) out.push_back(v);
        return out;
    }

    static int popcount(std::uint64_t mask) {
        int c = 0;
        while (mask) {
            mask &= mask - 1;
            ++c;
        }
        return c;
    }

    // ---- small named constructors ----

    static Graph path(int n) {
        std::vector<Edge> es;
        for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
        return Graph(n, std::move(es));
    }

    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
        std::vector<Edge> es;
        for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
        es.emplace_back(0, n - 1);
        return Graph(n, std::move(es));
    }

    static Graph complete(int n) {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
        return Graph(n, std::move(es));
    }

    // Star K_{1,k}: vertex 0 is the center, 1..k are the outer vertices.
    static Graph star(int k) {
        std::vector<Edge> es;
        for (int i = 1; i <= k; ++i) es.emplace_back(0, i);
        return Graph(k + 1, std::move(es));
    }

    // Disjoint union, second operand's vertices shifted by n().
    Graph disjoint_union(const Graph& other) const {
        std::vector<Edge> es = edges_;
        for (auto [u, v] : other.edges_) es.emplace_back(u + n_, v + n_);
        return Graph(n_ + other.n_, std::move(es));
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
};

// Vertices of degree exactly 1 (the set L(G)).
inline std::vector<Vertex> leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

// Vertices whose closed neighborhood induces a clique.
inline std::vector<Vertex> simplicial_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v) {
        bool ok = true;
        auto nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size() && ok; ++i)
            for (size_t j = i + 1; j < nbrs.size() && ok; ++j)
                if (!g.has_edge(nbrs[i], nbrs[j])) ok = false;
        if (ok) out.push_back(v);
    }
    return out;
}

// All unordered pairs u < v with N[u] = N[v]. Such pairs are always edges.
inline std::vector<Edge> similar_pairs(const Graph& g) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (g.closed_mask(u) == g.closed_mask(v)) out.emplace_back(u, v);
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;   // new index -> original vertex, ascending
    std::vector<int> from_original;    // original vertex -> new index, -1 if absent
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> from(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < keep.size(); ++i) from[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (from[u] >= 0 && from[v] >= 0) es.emplace_back(from[u], from[v]);
    return InducedSubgraph{Graph(static_cast<int>(keep.size()), std::move(es)),
                           std::move(keep), std::move(from)};
}

// Partition into maximal connected vertex sets, ordered by minimum vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(static_cast<size_t>(g.n()), false);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination ordering when chordal.
    std::vector<Vertex> elimination_order;
    // An induced cycle of length >= 4 when not chordal.
    std::vector<Vertex> chordless_cycle;
};

// Perfect-elimination test by repeated removal of the lowest-index simplicial
// vertex. When the graph is not chordal the residual graph has no simplicial
// vertex; a chordless cycle witness is then extracted by routing around a
// vertex with two nonadjacent neighbors.
inline ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    std::uint64_t alive = g.n() >= 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << g.n()) - 1;
    auto alive_nbrs = [&](Vertex v) { return g.neighbor_mask(v) & alive; };
    auto is_simplicial_alive = [&](Vertex v) {
        auto nbrs = Graph::mask_to_vertices(alive_nbrs(v));
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (!g.has_edge(nbrs[i], nbrs[j])) return false;
        return true;
    };

    int remaining = g.n();
    while (remaining > 0) {
        Vertex pick = -1;
        for (Vertex v = 0; v < g.n() && pick < 0; ++v)
            if ((alive >> v & 1) && is_simplicial_alive(v)) pick = v;
        if (pick < 0) break;
        res.elimination_order.push_back(pick);
        alive &= ~(std::uint64_t{1} << pick);
        --remaining;
    }
    if (remaining == 0) {
        res.chordal = true;
        return res;
    }

    // Witness search in the stuck (hence non-chordal) residual graph.
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!(alive >> v & 1)) continue;
        auto nbrs = Graph::mask_to_vertices(alive_nbrs(v));
        for (size_t i = 0; i < nbrs.size(); ++i) {
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                Vertex x = nbrs[i], y = nbrs[j];
                if (g.has_edge(x, y)) continue;
                // BFS from x to y avoiding N[v] \ {x,y}.
                std::uint64_t blocked = (g.closed_mask(v) & alive) &
                                        ~(std::uint64_t{1} << x) & ~(std::uint64_t{1} << y);
                std::vector<int> prev(static_cast<size_t>(g.n()), -2);
                std::vector<Vertex> queue{x};
                prev[x] = -1;
                for (size_t qi = 0; qi < queue.size(); ++qi) {
                    Vertex c = queue[qi];
                    if (c == y) break;
                    for (Vertex w : Graph::mask_to_vertices(alive_nbrs(c))) {
                        if ((blocked >> w & 1) || prev[w] != -2) continue;
                        if (c == x && w == y) continue;  // path must have >= 2 edges
                        prev[w] = c;
                        queue.push_back(w);
                    }
                }
                if (prev[y] == -2) continue;
                std::vector<Vertex> cyc;
                for (Vertex c = y; c != -1; c = prev[c]) cyc.push_back(c);
                std::reverse(cyc.begin(), cyc.end());  // x .. y
                cyc.insert(cyc.begin(), v);
                // Shorten to an induced cycle: the BFS path is shortest in the
                // restricted graph, so only consecutive vertices are adjacent.
                res.chordless_cycle = cyc;
                return res;
            }
        }
    }
    throw std::logic_error("is_chordal: stuck graph without witness");
}

}  // namespace leafpower
