#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ltdom/errors.hpp"
#include "ltdom/graph.hpp"

namespace ltdom {

// Built-in exhaustive enumeration caps. Larger orders come from external
// graph6 files produced by dedicated enumeration tools.
inline constexpr int kEnumerateMaxN = 8;
inline constexpr int kEnumerateC4FreeMaxN = 9;
inline constexpr int kCanonicalMaxN = 16;

namespace enum_detail {

using code_t = unsigned __int128;

// Minimizes the column-major upper-triangle adjacency bitstring over all
// vertex orderings, by depth-first placement with prefix pruning. Earlier
// columns are more significant, so per-column comparison decides the order.
struct Canonicalizer {
    int n;
    std::vector<uint32_t> adj; // single-word rows, n <= 16
    std::vector<int> hint;     // candidate order: ascending degree, then index
    std::vector<int> perm;
    std::vector<uint32_t> cols;
    std::vector<uint32_t> best_cols;
    bool have_best = false;
    uint32_t used = 0;

    explicit Canonicalizer(const Graph& g) : n(g.order()) {
        adj.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            adj[static_cast<std::size_t>(v)] = static_cast<uint32_t>(g.neighbors(v).word(0));
        hint.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) hint[static_cast<std::size_t>(v)] = v;
        std::stable_sort(hint.begin(), hint.end(), [&](int a, int b) {
            return std::popcount(adj[static_cast<std::size_t>(a)]) < std::popcount(adj[static_cast<std::size_t>(b)]);
        });
        perm.assign(static_cast<std::size_t>(n), -1);
        cols.assign(static_cast<std::size_t>(n), 0);
        best_cols.assign(static_cast<std::size_t>(n), 0);
    }

    code_t run() {
        if (n > 0) dfs(0, true);
        code_t code = 0;
        for (int pos = 1; pos < n; ++pos) code = (code << pos) | best_cols[static_cast<std::size_t>(pos)];
        return code;
    }

private:
    void dfs(int pos, bool tight) {
        if (pos == n) {
            if (!have_best || !tight) {
                best_cols = cols;
                have_best = true;
            }
            return;
        }
        for (int cand : hint) {
            if ((used >> cand) & 1) continue;
            uint32_t col = 0;
            for (int i = 0; i < pos; ++i)
                col = (col << 1) | ((adj[static_cast<std::size_t>(cand)] >>
                                     perm[static_cast<std::size_t>(i)]) &
                                    1);
            bool child_tight = tight;
            if (have_best && tight) {
                if (col > best_cols[static_cast<std::size_t>(pos)]) continue;
                if (col < best_cols[static_cast<std::size_t>(pos)]) child_tight = false;
            }
            perm[static_cast<std::size_t>(pos)] = cand;
            cols[static_cast<std::size_t>(pos)] = col;
            used |= uint32_t{1} << cand;
            dfs(pos + 1, child_tight);
            used &= ~(uint32_t{1} << cand);
        }
    }
};

inline Graph graph_from_code(int n, code_t code) {
    std::vector<uint32_t> cols(static_cast<std::size_t>(n), 0);
    for (int pos = n - 1; pos >= 1; --pos) {
        cols[static_cast<std::size_t>(pos)] = static_cast<uint32_t>(code & ((code_t{1} << pos) - 1));
        code >>= pos;
    }
    GraphBuilder b(n);
    for (int pos = 1; pos < n; ++pos)
        for (int i = 0; i < pos; ++i)
            if ((cols[static_cast<std::size_t>(pos)] >> (pos - 1 - i)) & 1) b.add_edge(i, pos);
    return b.build();
}

inline Graph extend(const Graph& parent, uint32_t mask) {
    const int k = parent.order();
    GraphBuilder b(k + 1);
    for (int v = 0; v < k; ++v)
        parent.neighbors(v).for_each([&](int w) {
            if (w > v) b.add_edge(v, w);
        });
    for (int v = 0; v < k; ++v)
        if ((mask >> v) & 1) b.add_edge(v, k);
    return b.build();
}

} // namespace enum_detail

// Canonical form key: graphs on up to 16 vertices are isomorphic iff their
// codes match.
inline enum_detail::code_t canonical_code(const Graph& g) {
    if (g.order() > kCanonicalMaxN)
        throw capability_error("canonical form is implemented for n <= " + std::to_string(kCanonicalMaxN));
    enum_detail::Canonicalizer c(g);
    return c.run();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_code(a) == canonical_code(b);
}

// One representative per isomorphism class of simple graphs on n vertices,
// grown one vertex at a time with canonical-form dedup. Output is in
// ascending canonical-code order and each graph carries its canonical
// labeling.
inline std::vector<Graph> all_graphs(int n) {
    if (n < 1) throw std::invalid_argument("all_graphs requires n >= 1");
    if (n > kEnumerateMaxN)
        throw capability_error("built-in enumeration is capped at n <= " + std::to_string(kEnumerateMaxN) +
                               "; supply larger orders as graph6 files from an external enumeration tool");
    using enum_detail::code_t;
    std::vector<code_t> level{0}; // K_1
    for (int k = 2; k <= n; ++k) {
        std::set<code_t> next;
        for (code_t pc : level) {
            Graph parent = enum_detail::graph_from_code(k - 1, pc);
            for (uint32_t mask = 0; mask < (uint32_t{1} << (k - 1)); ++mask)
                next.insert(canonical_code(enum_detail::extend(parent, mask)));
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (code_t code : level) out.push_back(enum_detail::graph_from_code(n, code));
    return out;
}

// Same scheme restricted to graphs without a 4-cycle subgraph. C4-freeness is
// hereditary, so growing only C4-free representatives and filtering the
// attachment sets (no two chosen neighbors may share a common neighbor) is
// exhaustive.
inline std::vector<Graph> all_c4_free_graphs(int n) {
    if (n < 1) throw std::invalid_argument("all_c4_free_graphs requires n >= 1");
    if (n > kEnumerateC4FreeMaxN)
        throw capability_error("built-in C4-free enumeration is capped at n <= " +
                               std::to_string(kEnumerateC4FreeMaxN));
    using enum_detail::code_t;
    std::vector<code_t> level{0};
    for (int k = 2; k <= n; ++k) {
        std::set<code_t> next;
        for (code_t pc : level) {
            Graph parent = enum_detail::graph_from_code(k - 1, pc);
            std::vector<uint32_t> conflict(static_cast<std::size_t>(k - 1), 0);
            for (int u = 0; u < k - 1; ++u)
                for (int v = u + 1; v < k - 1; ++v)
                    if (parent.neighbors(u).word(0) & parent.neighbors(v).word(0)) {
                        conflict[static_cast<std::size_t>(u)] |= uint32_t{1} << v;
                        conflict[static_cast<std::size_t>(v)] |= uint32_t{1} << u;
                    }
            for (uint32_t mask = 0; mask < (uint32_t{1} << (k - 1)); ++mask) {
                bool ok = true;
                for (uint32_t m = mask; m && ok; m &= m - 1)
                    if (conflict[static_cast<std::size_t>(std::countr_zero(m))] & mask) ok = false;
                if (ok) next.insert(canonical_code(enum_detail::extend(parent, mask)));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (code_t code : level) out.push_back(enum_detail::graph_from_code(n, code));
    return out;
}

namespace enum_detail {

inline std::string ahu_encode(const Graph& t, int v, int parent) {
    std::vector<std::string> kids;
    t.neighbors(v).for_each([&](int w) {
        if (w != parent) kids.push_back(ahu_encode(t, w, v));
    });
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

} // namespace enum_detail

// Canonical string of a tree: the AHU encoding rooted at the center vertex,
// or at the central edge when the center is an edge.
inline std::string tree_canonical_code(const Graph& t) {
    if (!t.is_tree()) throw std::invalid_argument("tree_canonical_code requires a tree");
    const int n = t.order();
    if (n == 1) return "V()";
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> peel;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) peel.push_back(v);
    }
    int remaining = n;
    std::vector<int> centers;
    while (true) {
        if (remaining <= 2) {
            for (int v = 0; v < n; ++v)
                if (deg[static_cast<std::size_t>(v)] >= 0 &&
                    (remaining == 1 ? deg[static_cast<std::size_t>(v)] == 0 : deg[static_cast<std::size_t>(v)] == 1))
                    centers.push_back(v);
            break;
        }
        std::vector<int> next;
        for (int v : peel) {
            deg[static_cast<std::size_t>(v)] = -1;
            --remaining;
            t.neighbors(v).for_each([&](int w) {
                if (deg[static_cast<std::size_t>(w)] > 0 && --deg[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
            });
        }
        peel = std::move(next);
    }
    if (centers.size() == 1) return "V" + enum_detail::ahu_encode(t, centers[0], -1);
    std::string s1 = enum_detail::ahu_encode(t, centers[0], centers[1]);
    std::string s2 = enum_detail::ahu_encode(t, centers[1], centers[0]);
    return "E" + (s1 <= s2 ? s1 + s2 : s2 + s1);
}

// One representative per isomorphism class of trees on n vertices, grown by
// leaf attachment with AHU dedup; ordered by canonical string.
inline std::vector<Graph> all_trees(int n) {
    if (n < 1) throw std::invalid_argument("all_trees requires n >= 1");
    std::map<std::string, Graph> level;
    level.emplace("V()", Graph::from_edges(1, {}));
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [code, tree] : level) {
            for (int v = 0; v < k - 1; ++v) {
                Graph child = enum_detail::extend(tree, uint32_t{1} << v);
                next.emplace(tree_canonical_code(child), std::move(child));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [code, tree] : level) out.push_back(std::move(tree));
    return out;
}

} // namespace ltdom
