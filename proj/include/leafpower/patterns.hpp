#pragma once

// Named forbidden-subgraph patterns and an induced-subgraph matcher.
//
// Two pattern families ship with the library:
//   - bull, dart, gem: the obstructions (besides chordality) for 3-leaf
//     powers. bull = triangle with two pendants on distinct vertices,
//     dart = K4 minus an edge plus a pendant on a degree-3 vertex,
//     gem = P4 plus a universal vertex.
//   - G1..G11: the minimal chordal graphs that are not 4-leaf powers, up to
//     7 vertices, computed exhaustively with the oracle (such minimal graphs
//     are automatically twin-free). Together with chordality they
//     characterize 4-leaf powers of graphs without similar vertices; the
//     oracle-agreement tests re-derive this end to end.
//
// Pattern file format (UTF-8, line oriented):
//   pattern <name> <n>
//   <u> <v>          one edge per line, 0-based
//   end
// '#' starts a comment; blank lines are ignored. serialize_pattern_set emits
// the canonical comment-free form and round-trips bit-exact.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leafpower/errors.hpp"
#include "leafpower/graph.hpp"
#include "leafpower/oracle.hpp"

namespace leafpower {

struct Pattern {
    std::string name;
    Graph graph;
};

class PatternSet {
public:
    PatternSet() = default;

    explicit PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
        std::map<std::string, int> names;
        std::map<std::string, std::string> canons;
        for (const Pattern& p : patterns_) {
            if (p.graph.n() < 4 || p.graph.n() > 10)
                throw std::invalid_argument("PatternSet: pattern " + p.name +
                                            " must have 4..10 vertices");
            if (!is_connected(p.graph))
                throw std::invalid_argument("PatternSet: pattern " + p.name + " is disconnected");
            if (!names.emplace(p.name, 1).second)
                throw std::invalid_argument("PatternSet: duplicate name " + p.name);
            auto key = canonical_form(p.graph);
            auto [it, fresh] = canons.emplace(key, p.name);
            if (!fresh)
                throw std::invalid_argument("PatternSet: " + p.name + " is isomorphic to " +
                                            it->second);
        }
    }

    const std::vector<Pattern>& patterns() const { return patterns_; }
    size_t size() const { return patterns_.size(); }
    const Pattern& operator[](size_t i) const { return patterns_[i]; }

    const Pattern* find(std::string_view name) const {
        for (const Pattern& p : patterns_)
            if (p.name == name) return &p;
        return nullptr;
    }

private:
    std::vector<Pattern> patterns_;
};

// Lexicographically least injective map pattern-vertex -> host-vertex that
// preserves both adjacency and non-adjacency, if any.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Pattern& p) {
    const Graph& h = p.graph;
    if (h.n() > g.n()) return std::nullopt;
    std::vector<Vertex> map(static_cast<size_t>(h.n()), -1);
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == h.n()) return true;
        for (Vertex cand = 0; cand < g.n(); ++cand) {
            if (used[cand] || g.degree(cand) < h.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (g.has_edge(map[j], cand) != h.has_edge(j, i)) ok = false;
            if (!ok) continue;
            map[i] = cand;
            used[cand] = 1;
            if (self(self, i + 1)) return true;
            used[cand] = 0;
        }
        map[i] = -1;
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

struct PatternHit {
    std::string name;
    std::vector<Vertex> embedding;
};

// First pattern in set order with an induced embedding.
inline std::optional<PatternHit> contains_any(const Graph& g, const PatternSet& s) {
    for (const Pattern& p : s.patterns())
        if (auto emb = find_induced(g, p)) return PatternHit{p.name, *emb};
    return std::nullopt;
}

inline PatternSet load_pattern_file(std::string_view text) {
    std::vector<Pattern> patterns;
    std::string cur_name;
    int cur_n = -1;
    std::vector<Edge> cur_edges;
    bool in_pattern = false;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                        : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;  // blank
        if (tok == "pattern") {
            if (in_pattern) throw parse_error(lineno, "pattern before previous 'end'");
            if (!(ss >> cur_name >> cur_n) || cur_n < 0)
                throw parse_error(lineno, "expected 'pattern <name> <n>'");
            cur_edges.clear();
            in_pattern = true;
        } else if (tok == "end") {
            if (!in_pattern) throw parse_error(lineno, "'end' without 'pattern'");
            try {
                patterns.push_back(Pattern{cur_name, Graph(cur_n, cur_edges)});
            } catch (const std::invalid_argument& e) {
                throw parse_error(lineno, std::string(e.what()));
            }
            in_pattern = false;
        } else {
            if (!in_pattern) throw parse_error(lineno, "edge outside pattern block");
            int u = 0, v = 0;
            try {
                u = std::stoi(tok);
            } catch (...) {
                throw parse_error(lineno, "expected '<u> <v>'");
            }
            if (!(ss >> v)) throw parse_error(lineno, "expected '<u> <v>'");
            std::string rest;
            if (ss >> rest) throw parse_error(lineno, "trailing token '" + rest + "'");
            cur_edges.emplace_back(u, v);
        }
    }
    if (in_pattern) throw parse_error(lineno, "missing 'end'");
    try {
        return PatternSet(std::move(patterns));
    } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, std::string(e.what()));
    }
}

// Canonical comment-free text form; load_pattern_file round-trips it.
inline std::string serialize_pattern_set(const PatternSet& s) {
    std::string out;
    for (const Pattern& p : s.patterns()) {
        out += "pattern " + p.name + " " + std::to_string(p.graph.n()) + "\n";
        for (auto [u, v] : p.graph.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        out += "end\n";
    }
    return out;
}

inline Pattern bull() {
    return Pattern{"bull", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}})};
}

inline Pattern dart() {
    return Pattern{"dart", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}})};
}

inline Pattern gem() {
    return Pattern{"gem", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}})};
}

// bull, dart, gem in this order.
inline const PatternSet& classic_patterns() {
    static const PatternSet set(std::vector<Pattern>{bull(), dart(), gem()});
    return set;
}

// Canonical text of the shipped 4-leaf-power obstruction file; identical to
// data/figure1.patterns.
inline std::string_view figure1_text() {
    static constexpr std::string_view text =
        "pattern G1 6\n0 4\n0 5\n1 4\n1 5\n2 4\n2 5\n3 5\n4 5\nend\n"
        "pattern G2 6\n0 3\n0 4\n0 5\n1 4\n1 5\n2 4\n2 5\n3 5\n4 5\nend\n"
        "pattern G3 6\n0 3\n0 4\n0 5\n1 3\n1 5\n2 4\n2 5\n3 5\n4 5\nend\n"
        "pattern G4 6\n0 3\n0 4\n1 3\n1 5\n2 4\n2 5\n3 4\n3 5\n4 5\nend\n"
        "pattern G5 7\n0 4\n0 6\n1 4\n1 6\n2 5\n2 6\n3 5\n3 6\n4 6\n5 6\nend\n"
        "pattern G6 7\n0 4\n0 5\n0 6\n1 4\n1 5\n1 6\n2 5\n3 6\n4 5\n4 6\n5 6\nend\n"
        "pattern G7 7\n0 3\n0 4\n0 5\n0 6\n1 4\n1 5\n1 6\n2 6\n3 5\n4 5\n4 6\n5 6\nend\n"
        "pattern G8 7\n0 3\n0 4\n0 5\n0 6\n1 4\n1 5\n2 5\n2 6\n3 6\n4 5\n4 6\n5 6\nend\n"
        "pattern G9 7\n0 3\n0 4\n0 5\n0 6\n1 4\n1 5\n1 6\n2 6\n3 5\n3 6\n4 5\n4 6\n5 6\nend\n"
        "pattern G10 7\n0 3\n0 4\n0 5\n0 6\n1 3\n1 4\n2 5\n2 6\n3 4\n3 5\n3 6\n4 6\n5 6\nend\n"
        "pattern G11 7\n0 2\n0 3\n0 4\n0 5\n0 6\n1 4\n1 5\n1 6\n2 3\n2 5\n2 6\n3 6\n4 5\n4 6\n"
        "5 6\nend\n";
    return text;
}

// The forbidden induced subgraphs (beyond chordality) for 4-leaf powers
// without similar vertices.
inline const PatternSet& figure1_patterns() {
    static const PatternSet set = load_pattern_file(figure1_text());
    return set;
}

}  // namespace leafpower
