// Exploration tool: sweeps small graph classes with the exhaustive oracle.
//
//   find_forbidden patterns [max_n]   minimal chordal non-4-leaf-power graphs
//                                     (they are twin-free by minimality),
//                                     printed in pattern-file format
//   find_forbidden fellows [max_n]    hunt for 4-leaf powers without leaves
//                                     that are not 5-leaf powers

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "leafpower/graph.hpp"
#include "leafpower/leaf_tree.hpp"
#include "leafpower/oracle.hpp"

using namespace leafpower;

namespace {

std::map<std::string, bool> g_is_klp_cache;

bool is_klp(const Graph& g, int k) {
    std::string key = std::to_string(k) + "|" + canonical_form(g);
    auto it = g_is_klp_cache.find(key);
    if (it != g_is_klp_cache.end()) return it->second;
    SearchLimits lim;
    lim.budget_seconds = 600.0;
    auto v = oracle_root(g, k, lim);
    if (v.is_inconclusive()) {
        std::cerr << "oracle inconclusive (" << v.note << "), raise limits\n";
        std::exit(2);
    }
    bool ans = v.is_root();
    g_is_klp_cache[key] = ans;
    return ans;
}

void find_patterns(int max_n) {
    struct Found {
        int n;
        int m;
        std::string canon;
        Graph g;
    };
    std::vector<Found> found;
    for (int n = 4; n <= max_n; ++n) {
        int examined = 0;
        for (const Graph& g : enumerate_graphs(n, true)) {
            if (!is_chordal(g).chordal) continue;
            if (!similar_pairs(g).empty()) continue;  // reducible, never minimal
            ++examined;
            bool minimal = true;
            for (int v = 0; v < n && minimal; ++v) {
                std::vector<Vertex> keep;
                for (int w = 0; w < n; ++w)
                    if (w != v) keep.push_back(w);
                if (!is_klp(induced_subgraph(g, keep).graph, 4)) minimal = false;
            }
            if (!minimal) continue;
            if (is_klp(g, 4)) continue;
            found.push_back({n, g.edge_count(), canonical_form(g), g});
            std::cerr << "minimal non-4-leaf-power found: n=" << n
                      << " m=" << g.edge_count() << "\n";
        }
        std::cerr << "n=" << n << ": examined " << examined
                  << " twin-free chordal classes, " << found.size()
                  << " minimal graphs so far\n";
    }
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        return std::tie(a.n, a.m, a.canon) < std::tie(b.n, b.m, b.canon);
    });
    std::cout << "# forbidden induced subgraphs for 4-leaf powers without similar vertices\n";
    std::cout << "# computed as the minimal chordal non-4-leaf-power graphs, n <= "
              << max_n << "\n";
    for (size_t i = 0; i < found.size(); ++i) {
        std::cout << "pattern G" << (i + 1) << " " << found[i].n << "\n";
        for (auto [u, v] : found[i].g.edges()) std::cout << u << " " << v << "\n";
        std::cout << "end\n";
    }
}

void hunt_fellows(int max_n) {
    for (int n = 4; n <= max_n; ++n) {
        int hits = 0;
        for (const Graph& g : enumerate_graphs(n, true)) {
            if (!leaves(g).empty()) continue;
            if (!is_chordal(g).chordal) continue;
            if (!is_klp(g, 4)) continue;
            if (is_klp(g, 5)) continue;
            ++hits;
            std::cout << "4-leaf power, leafless, not a 5-leaf power: n=" << n << " edges:";
            for (auto [u, v] : g.edges()) std::cout << " " << u << "-" << v;
            std::cout << "\n";
        }
        std::cout << "n=" << n << ": " << hits << " examples\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string mode = argc > 1 ? argv[1] : "patterns";
    int max_n = argc > 2 ? std::atoi(argv[2]) : 7;
    if (mode == "patterns")
        find_patterns(max_n);
    else if (mode == "fellows")
        hunt_fellows(max_n);
    else {
        std::cerr << "usage: find_forbidden {patterns|fellows} [max_n]\n";
        return 2;
    }
    return 0;
}
