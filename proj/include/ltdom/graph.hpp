#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ltdom/vertex_set.hpp"

namespace ltdom {

// Immutable simple graph on vertices 0..n-1 with bitset adjacency rows.
// "Mutating" operations return new graphs.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }

    long long edge_count() const {
        long long deg_sum = 0;
        for (const auto& row : adj_) deg_sum += row.count();
        return deg_sum / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    // N(v); never contains v itself.
    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // N[v] = N(v) union {v}.
    VertexSet closed_neighbors(int v) const {
        check_vertex(v);
        VertexSet s = adj_[static_cast<std::size_t>(v)];
        s.set(v);
        return s;
    }

    int degree(int v) const { return neighbors(v).count(); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(v)].empty()) return true;
        return false;
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    // Union of N(v) over v in s. A set D is a TD-set iff this equals V.
    VertexSet open_set_neighborhood(const VertexSet& s) const {
        if (s.universe() != n_) throw std::invalid_argument("vertex set universe does not match graph order");
        VertexSet out(n_);
        s.for_each([&](int v) { out |= adj_[static_cast<std::size_t>(v)]; });
        return out;
    }

    std::vector<VertexSet> components() const {
        std::vector<VertexSet> comps;
        VertexSet seen(n_);
        for (int start = 0; start < n_; ++start) {
            if (seen.test(start)) continue;
            VertexSet comp(n_);
            VertexSet frontier(n_);
            frontier.set(start);
            while (frontier.any()) {
                comp |= frontier;
                VertexSet next(n_);
                frontier.for_each([&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
                frontier = next - comp;
            }
            seen |= comp;
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_connected() const { return n_ >= 1 && components().size() == 1; }

    // Length of a shortest cycle; absent for forests. BFS from each vertex.
    std::optional<int> girth() const {
        int best = 0;
        bool found = false;
        std::vector<int> dist(static_cast<std::size_t>(n_));
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::vector<int> queue(static_cast<std::size_t>(n_));
        for (int root = 0; root < n_; ++root) {
            std::fill(dist.begin(), dist.end(), -1);
            int head = 0, tail = 0;
            queue[tail++] = root;
            dist[static_cast<std::size_t>(root)] = 0;
            parent[static_cast<std::size_t>(root)] = -1;
            while (head < tail) {
                int u = queue[head++];
                bool stop = false;
                adj_[static_cast<std::size_t>(u)].for_each([&](int w) {
                    if (stop) return;
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                        parent[static_cast<std::size_t>(w)] = u;
                        queue[tail++] = w;
                    } else if (w != parent[static_cast<std::size_t>(u)]) {
                        int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                        if (!found || len < best) {
                            best = len;
                            found = true;
                        }
                        if (best == 3) stop = true;
                    }
                });
                if (stop) return 3;
                // No cycle through this root can beat the current best once
                // the BFS frontier is deep enough.
                if (found && dist[static_cast<std::size_t>(u)] * 2 > best) break;
            }
        }
        if (!found) return std::nullopt;
        return best;
    }

    // True iff some 4-cycle exists as a subgraph, equivalently two distinct
    // vertices share at least two common neighbors.
    bool contains_c4() const {
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                const auto& a = adj_[static_cast<std::size_t>(u)];
                const auto& b = adj_[static_cast<std::size_t>(v)];
                int common = 0;
                for (std::size_t i = 0; i < a.word_count() && common < 2; ++i)
                    common += std::popcount(a.word(i) & b.word(i));
                if (common >= 2) return true;
            }
        }
        return false;
    }

    bool is_tree() const { return n_ >= 1 && is_connected() && edge_count() == n_ - 1; }

    struct Induced {
        Graph graph;
        std::vector<int> to_old; // new label -> old label
        std::vector<int> to_new; // old label -> new label, -1 if dropped
    };

    Induced induced_subgraph(const VertexSet& keep) const {
        if (keep.universe() != n_) throw std::invalid_argument("vertex set universe does not match graph order");
        Induced out;
        out.to_new.assign(static_cast<std::size_t>(n_), -1);
        keep.for_each([&](int v) {
            out.to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.to_old.size());
            out.to_old.push_back(v);
        });
        int m = static_cast<int>(out.to_old.size());
        out.graph.n_ = m;
        out.graph.adj_.assign(static_cast<std::size_t>(m), VertexSet(m));
        for (int nv = 0; nv < m; ++nv) {
            int ov = out.to_old[static_cast<std::size_t>(nv)];
            adj_[static_cast<std::size_t>(ov)].for_each([&](int ow) {
                int nw = out.to_new[static_cast<std::size_t>(ow)];
                if (nw >= 0 && nw > nv) out.graph.add_edge_internal(nv, nw);
            });
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for graph of order " +
                                        std::to_string(n_));
    }

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;

    friend class GraphBuilder;
};

// Incremental construction helper; produces an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        g_.n_ = n;
        g_.adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    }

    GraphBuilder& add_edge(int u, int v) {
        g_.add_edge_internal(u, v);
        return *this;
    }

    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

} // namespace ltdom
