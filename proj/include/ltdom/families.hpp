#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ltdom/graph.hpp"
#include "ltdom/vertex_set.hpp"

namespace ltdom {

// Canonical labelings are fixed so examples and tests are reproducible:
// paths and cycles use consecutive labels, complete_bipartite puts the a-side
// first, star_subdivided puts the center at 0.

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete requires n >= 1");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

inline Graph complete_bipartite(int a, int b_side) {
    if (a < 1 || b_side < 1) throw std::invalid_argument("complete_bipartite requires both sides >= 1");
    GraphBuilder b(a + b_side);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b_side; ++j) b.add_edge(i, a + j);
    return b.build();
}

// Star K_{1,k+1} with the first s of its k+1 edges subdivided once. Center is
// vertex 0; ray i < s has middle 1+2i and leaf 2+2i; ray i >= s is the leaf
// 1+2s+(i-s).
inline Graph star_subdivided(int k, int s) {
    if (k < 0) throw std::invalid_argument("star_subdivided requires k >= 0");
    if (s < 0 || s > k + 1) throw std::invalid_argument("star_subdivided requires 0 <= s <= k+1");
    const int rays = k + 1;
    GraphBuilder b(1 + rays + s);
    for (int i = 0; i < rays; ++i) {
        if (i < s) {
            b.add_edge(0, 1 + 2 * i);
            b.add_edge(1 + 2 * i, 2 + 2 * i);
        } else {
            b.add_edge(0, 1 + 2 * s + (i - s));
        }
    }
    return b.build();
}

// Certificate that a graph is the 2-corona of the graph induced by `core`:
// each core vertex carries a pendant path core--middle--leaf and the three
// classes partition the vertex set.
struct CoronaWitness {
    struct Pendant {
        int core;
        int middle;
        int leaf;
    };
    VertexSet core;
    std::vector<Pendant> pendants;
};

struct TwoCorona {
    Graph graph;
    CoronaWitness witness;
};

// 2-corona of h: order 3|V(h)|. Core keeps h's labels; vertex n+2v is the
// middle and n+2v+1 the leaf of v's pendant path.
inline TwoCorona two_corona(const Graph& h) {
    const int n = h.order();
    if (n < 1) throw std::invalid_argument("two_corona requires a graph with at least one vertex");
    GraphBuilder b(3 * n);
    for (int v = 0; v < n; ++v)
        h.neighbors(v).for_each([&](int w) {
            if (w > v) b.add_edge(v, w);
        });
    TwoCorona out{Graph(), CoronaWitness{VertexSet(3 * n), {}}};
    for (int v = 0; v < n; ++v) {
        int middle = n + 2 * v;
        int leaf = n + 2 * v + 1;
        b.add_edge(v, middle);
        b.add_edge(middle, leaf);
        out.witness.core.set(v);
        out.witness.pendants.push_back({v, middle, leaf});
    }
    out.graph = b.build();
    return out;
}

// The twin-free family of order 2k+4 with total domination number 2: take
// K_{2,k} with centers a, b; subdivide every edge at a, add the edge ab, then
// attach one leaf to each of a and b. Labels: a=0, b=1, middles 2..k+1 (around
// a), subdivision partners k+2..2k+1 (adjacent to b), leaf of a = 2k+2, leaf
// of b = 2k+3.
inline Graph g_k(int k) {
    if (k < 3) throw std::invalid_argument("g_k requires k >= 3");
    GraphBuilder b(2 * k + 4);
    b.add_edge(0, 1);
    for (int i = 0; i < k; ++i) {
        int middle = 2 + i;
        int outer = 2 + k + i;
        b.add_edge(0, middle);
        b.add_edge(middle, outer);
        b.add_edge(outer, 1);
    }
    b.add_edge(0, 2 * k + 2);
    b.add_edge(1, 2 * k + 3);
    return b.build();
}

// k >= 2 disjoint 5-cycles plus a hub adjacent to one vertex of each cycle.
// Hub is vertex 0; pentagon p occupies 1+5p..5+5p with the hub attached at
// 1+5p.
inline Graph pentagon_hub(int k) {
    if (k < 2) throw std::invalid_argument("pentagon_hub requires k >= 2");
    GraphBuilder b(5 * k + 1);
    for (int p = 0; p < k; ++p) {
        int base = 1 + 5 * p;
        for (int i = 0; i < 5; ++i) b.add_edge(base + i, base + (i + 1) % 5);
        b.add_edge(0, base);
    }
    return b.build();
}

namespace family_detail {

// Decomposes one connected component as a 2-corona, or returns false. The
// component P_3 decomposes in two ways; the minimum-index endpoint is taken
// as the pendant leaf so the witness is deterministic.
inline bool corona_component(const Graph& g, const VertexSet& comp, CoronaWitness& w) {
    const int size = comp.count();
    if (size % 3 != 0 || size == 0) return false;

    if (size == 3) {
        auto vs = comp.to_vector();
        int center = -1;
        for (int v : vs)
            if (g.degree(v) == 2) center = v;
        if (center < 0) return false; // triangle has no degree-2-with-leaves shape
        std::vector<int> ends;
        for (int v : vs)
            if (v != center) {
                if (g.degree(v) != 1) return false;
                ends.push_back(v);
            }
        if (ends.size() != 2) return false;
        w.core.set(ends[1]); // larger endpoint is the core, smaller the leaf
        w.pendants.push_back({ends[1], center, ends[0]});
        return true;
    }

    VertexSet leaves(g.order());
    comp.for_each([&](int v) {
        if (g.degree(v) == 1) leaves.set(v);
    });
    const int third = size / 3;
    if (leaves.count() != third) return false;

    VertexSet supports(g.order());
    bool ok = true;
    std::vector<CoronaWitness::Pendant> pendants;
    leaves.for_each([&](int a) {
        if (!ok) return;
        int b = (g.neighbors(a)).first();
        if (g.degree(b) != 2 || leaves.test(b) || supports.test(b)) {
            ok = false;
            return;
        }
        supports.set(b);
        VertexSet rest = g.neighbors(b);
        rest.reset(a);
        int c = rest.first();
        if (leaves.test(c) || g.degree(c) < 2) {
            ok = false;
            return;
        }
        pendants.push_back({c, b, a});
    });
    if (!ok || supports.count() != third) return false;

    VertexSet core = comp - leaves - supports;
    if (core.count() != third) return false;
    // Each core vertex must carry exactly one pendant path, and supports may
    // not touch the core more than once.
    VertexSet seen_core(g.order());
    for (const auto& p : pendants) {
        if (!core.test(p.core) || seen_core.test(p.core)) return false;
        seen_core.set(p.core);
    }
    bool clean = true;
    core.for_each([&](int c) {
        if ((g.neighbors(c) & supports).count() != 1) clean = false;
    });
    if (!clean) return false;

    w.core |= core;
    for (const auto& p : pendants) w.pendants.push_back(p);
    return true;
}

} // namespace family_detail

// Recognizes 2-coronas: returns the witness decomposition if g is the
// 2-corona of some graph (the graph induced by witness.core), and nothing
// otherwise. Components are decomposed independently.
inline std::optional<CoronaWitness> is_two_corona(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    CoronaWitness w{VertexSet(g.order()), {}};
    for (const auto& comp : g.components())
        if (!family_detail::corona_component(g, comp, w)) return std::nullopt;
    return w;
}

// Length n iff g is connected and 2-regular.
inline std::optional<int> is_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    if (!g.is_connected()) return std::nullopt;
    return n;
}

} // namespace ltdom
