#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltdom/graph.hpp"
#include "ltdom/vertex_set.hpp"

namespace ltdom {

namespace dom_detail {

inline void check_subset(const Graph& g, const VertexSet& d) {
    if (d.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
}

// Single-word fast paths for n <= 64; the general paths fall back to VertexSet
// algebra.
inline bool small(const Graph& g) { return g.order() <= 64; }

inline uint64_t row(const Graph& g, int v) { return g.neighbors(v).word(0); }

inline bool locating_small(const Graph& g, uint64_t d) {
    const int n = g.order();
    uint64_t traces[64];
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!((d >> v) & 1)) traces[m++] = row(g, v) & d;
    std::sort(traces, traces + m);
    for (int i = 1; i < m; ++i)
        if (traces[i] == traces[i - 1]) return false;
    return true;
}

} // namespace dom_detail

// N[D] = V: every vertex is in d or adjacent to d.
inline bool is_dominating(const Graph& g, const VertexSet& d) {
    dom_detail::check_subset(g, d);
    if (dom_detail::small(g)) {
        uint64_t dw = d.word(0);
        for (int v = 0; v < g.order(); ++v)
            if (!(((dw >> v) & 1) || (dom_detail::row(g, v) & dw))) return false;
        return true;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!d.test(v) && !g.neighbors(v).intersects(d)) return false;
    return true;
}

// N(D) = V: every vertex, including members of d, has a neighbor in d.
inline bool is_total_dominating(const Graph& g, const VertexSet& d) {
    dom_detail::check_subset(g, d);
    if (dom_detail::small(g)) {
        uint64_t dw = d.word(0);
        for (int v = 0; v < g.order(); ++v)
            if (!(dom_detail::row(g, v) & dw)) return false;
        return true;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!g.neighbors(v).intersects(d)) return false;
    return true;
}

// Whether d separates u and v (both outside d) by their traces N(.) cap d.
inline bool locates(const Graph& g, const VertexSet& d, int u, int v) {
    dom_detail::check_subset(g, d);
    if (u == v) throw std::invalid_argument("locates requires two distinct vertices");
    if (d.test(u) || d.test(v))
        throw std::invalid_argument("locates is defined for vertices outside the candidate set");
    return (g.neighbors(u) & d) != (g.neighbors(v) & d);
}

// All pairs outside d have distinct traces. At most one vertex with an empty
// trace is permitted (two empty traces compare equal).
inline bool is_locating(const Graph& g, const VertexSet& d) {
    dom_detail::check_subset(g, d);
    if (dom_detail::small(g)) return dom_detail::locating_small(g, d.word(0));
    std::vector<std::vector<uint64_t>> traces;
    for (int v = 0; v < g.order(); ++v)
        if (!d.test(v)) traces.push_back((g.neighbors(v) & d).words());
    std::sort(traces.begin(), traces.end());
    return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

inline bool is_ltd(const Graph& g, const VertexSet& d) {
    return is_total_dominating(g, d) && is_locating(g, d);
}

enum class TwinKind { open, closed };

struct TwinPair {
    int u;
    int v;
    TwinKind kind;
};

// All unordered pairs with equal open or closed neighborhoods, ascending by
// (u, v).
inline std::vector<TwinPair> twin_pairs(const Graph& g) {
    std::vector<TwinPair> out;
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.neighbors(u) == g.neighbors(v)) {
                out.push_back({u, v, TwinKind::open});
            } else if (g.adjacent(u, v)) {
                VertexSet cu = g.neighbors(u);
                cu.set(u);
                VertexSet cv = g.neighbors(v);
                cv.set(v);
                if (cu == cv) out.push_back({u, v, TwinKind::closed});
            }
        }
    }
    return out;
}

inline bool is_twin_free(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.neighbors(u) == g.neighbors(v)) return false;
            if (g.adjacent(u, v)) {
                VertexSet cu = g.neighbors(u);
                cu.set(u);
                VertexSet cv = g.neighbors(v);
                cv.set(v);
                if (cu == cv) return false;
            }
        }
    }
    return true;
}

// S-external private neighborhood of v: vertices outside s adjacent to v and
// to no other vertex of s.
inline VertexSet epn(const Graph& g, int v, const VertexSet& s) {
    dom_detail::check_subset(g, s);
    if (!s.test(v))
        throw std::invalid_argument("epn requires v to be a member of the set");
    VertexSet out(g.order());
    VertexSet candidates = g.neighbors(v) - s;
    candidates.for_each([&](int w) {
        VertexSet t = g.neighbors(w) & s;
        if (t.count() == 1) out.set(w); // that single member is necessarily v
    });
    return out;
}

// The partition P_S of V \ S grouping vertices by identical traces N(.) cap S.
// X_S collects the members of singleton parts, Y_S the rest; n1 = |X_S| and
// n2 = k - n1 where k is the number of parts.
struct NeighborhoodPartition {
    struct Part {
        VertexSet trace;
        VertexSet members;
    };
    std::vector<Part> parts; // ordered by minimum member index
    VertexSet x_set;
    VertexSet y_set;
    int k = 0;
    int n1 = 0;
    int n2 = 0;
};

inline NeighborhoodPartition neighborhood_partition(const Graph& g, const VertexSet& s) {
    dom_detail::check_subset(g, s);
    const int n = g.order();
    std::map<std::vector<uint64_t>, int> index_of_trace;
    NeighborhoodPartition p;
    p.x_set = VertexSet(n);
    p.y_set = VertexSet(n);
    for (int v = 0; v < n; ++v) {
        if (s.test(v)) continue;
        VertexSet trace = g.neighbors(v) & s;
        auto [it, inserted] = index_of_trace.try_emplace(trace.words(), static_cast<int>(p.parts.size()));
        if (inserted) p.parts.push_back({std::move(trace), VertexSet(n)});
        p.parts[static_cast<std::size_t>(it->second)].members.set(v);
    }
    // Vertices were scanned in ascending order, so each part was created at
    // its minimum member; the creation order is already the required order.
    p.k = static_cast<int>(p.parts.size());
    for (const auto& part : p.parts) {
        if (part.members.count() == 1) {
            p.x_set |= part.members;
            ++p.n1;
        } else {
            p.y_set |= part.members;
        }
    }
    p.n2 = p.k - p.n1;
    return p;
}

} // namespace ltdom
