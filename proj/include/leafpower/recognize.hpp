#pragma once

// Membership tests for the 2-, 3- and 4-leaf power classes, the
// similar-vertex (true twin) reduction that underpins them, and certificates
// for the class H of "clique + pendant leaf" graphs.
//
// 2-leaf powers are the P3-free graphs (disjoint unions of cliques).
// 3-leaf powers are the bull-, dart- and gem-free chordal graphs.
// 4-leaf powers reduce by similar vertices to graphs that are 4-leaf powers
// iff chordal and free of the shipped G1..G11 obstructions.

#include <array>
#include <optional>
#include <vector>

#include "leafpower/graph.hpp"
#include "leafpower/patterns.hpp"

namespace leafpower {

struct SimilarReduction {
    Graph reduced;
    // (kept, deleted) per step, in original labels; each pair was similar at
    // the moment of deletion.
    std::vector<Edge> steps;
    std::vector<int> map_old_to_new;     // -1 for deleted vertices
    std::vector<Vertex> kept_vertices;   // new index -> original vertex
};

// Repeatedly delete the higher-indexed vertex of the lexicographically least
// similar pair until no similar pair remains.
inline SimilarReduction reduce_similar(const Graph& g) {
    std::uint64_t alive = g.n() == 0 ? 0
                          : g.n() >= 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << g.n()) - 1;
    std::vector<Edge> steps;
    while (true) {
        Edge least{-1, -1};
        for (Vertex u = 0; u < g.n() && least.first < 0; ++u) {
            if (!(alive >> u & 1)) continue;
            std::uint64_t nu = (g.neighbor_mask(u) & alive) | std::uint64_t{1} << u;
            for (Vertex v = u + 1; v < g.n(); ++v) {
                if (!(alive >> v & 1)) continue;
                std::uint64_t nv = (g.neighbor_mask(v) & alive) | std::uint64_t{1} << v;
                if (nu == nv) {
                    least = {u, v};
                    break;
                }
            }
        }
        if (least.first < 0) break;
        steps.push_back(least);
        alive &= ~(std::uint64_t{1} << least.second);
    }
    auto sub = induced_subgraph(g, Graph::mask_to_vertices(alive));
    return SimilarReduction{std::move(sub.graph), std::move(steps),
                            std::move(sub.from_original), std::move(sub.to_original)};
}

struct Recognize2Result {
    bool accepted = false;
    std::optional<std::array<Vertex, 3>> p3_witness;  // an induced path x-v-y
};

inline Recognize2Result recognize_2(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v) {
        auto nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (!g.has_edge(nbrs[i], nbrs[j]))
                    return {false, std::array<Vertex, 3>{nbrs[i], v, nbrs[j]}};
    }
    return {true, std::nullopt};
}

struct RecognizeResult {
    bool accepted = false;
    std::optional<std::vector<Vertex>> chordless_cycle;  // in original labels
    std::optional<PatternHit> pattern;                   // embedding in original labels
};

inline RecognizeResult recognize_3(const Graph& g) {
    auto ch = is_chordal(g);
    if (!ch.chordal) return {false, ch.chordless_cycle, std::nullopt};
    if (auto hit = contains_any(g, classic_patterns())) return {false, std::nullopt, hit};
    return {true, std::nullopt, std::nullopt};
}

// Applies the similar-vertex reduction first (legitimate because deleting one
// vertex of a similar pair preserves k-leaf-power membership), then checks
// chordality and the G1..G11 obstructions on the reduced graph. Witnesses
// are translated back to original labels.
inline RecognizeResult recognize_4(const Graph& g) {
    SimilarReduction red = reduce_similar(g);
    auto ch = is_chordal(red.reduced);
    if (!ch.chordal) {
        std::vector<Vertex> cyc;
        for (Vertex v : ch.chordless_cycle) cyc.push_back(red.kept_vertices[v]);
        return {false, std::move(cyc), std::nullopt};
    }
    if (auto hit = contains_any(red.reduced, figure1_patterns())) {
        for (Vertex& v : hit->embedding) v = red.kept_vertices[v];
        return {false, std::nullopt, std::move(hit)};
    }
    return {true, std::nullopt, std::nullopt};
}

// Certificate that g belongs to the class H: a clique c1..ct (t >= 2), a
// leaf u whose unique neighbor is c1, and every vertex outside {u} + clique
// having at most one neighbor in the clique.
struct CalHCertificate {
    std::vector<Vertex> clique;  // clique[0] = c1
    Vertex leaf = -1;

    bool valid_for(const Graph& g) const {
        if (clique.size() < 2) return false;
        if (leaf < 0 || leaf >= g.n() || g.degree(leaf) != 1) return false;
        if (!g.has_edge(leaf, clique[0])) return false;
        std::uint64_t cm = 0;
        for (Vertex c : clique) {
            if (c < 0 || c >= g.n() || c == leaf) return false;
            cm |= std::uint64_t{1} << c;
        }
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                if (!g.has_edge(clique[i], clique[j])) return false;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (v == leaf || (cm >> v & 1)) continue;
            if (Graph::popcount(g.neighbor_mask(v) & cm) > 1) return false;
        }
        return true;
    }
};

// Lexicographically least certificate (by leaf, then by the sorted clique
// list read as a sequence), or absence.
inline std::optional<CalHCertificate> is_calH_member(const Graph& g) {
    for (Vertex u : leaves(g)) {
        Vertex c1 = g.neighbors(u)[0];
        auto candidates = g.neighbors(c1);
        std::vector<Vertex> clique{c1};
        auto rec = [&](auto&& self, size_t from) -> std::optional<CalHCertificate> {
            if (clique.size() >= 2) {
                CalHCertificate cert{clique, u};
                if (cert.valid_for(g)) return cert;
            }
            for (size_t i = from; i < candidates.size(); ++i) {
                Vertex c = candidates[i];
                if (c == u) continue;
                bool adj_all = true;
                for (Vertex q : clique)
                    if (!g.has_edge(q, c)) adj_all = false;
                if (!adj_all) continue;
                clique.push_back(c);
                if (auto cert = self(self, i + 1)) return cert;
                clique.pop_back();
            }
            return std::nullopt;
        };
        if (auto cert = rec(rec, 0)) return cert;
    }
    return std::nullopt;
}

}  // namespace leafpower
