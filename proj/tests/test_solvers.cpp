#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ltdom/domination.hpp"
#include "ltdom/enumerate.hpp"
#include "ltdom/families.hpp"
#include "ltdom/solvers.hpp"

using namespace ltdom;

namespace {

int cycle_formula(int n) { return n / 2 + (n + 3) / 4 - n / 4; }

Graph random_graph(std::mt19937& rng, int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) b.add_edge(u, v);
    return b.build();
}

} // namespace

TEST_CASE("paper values for small families") {
    CHECK(min_ltd(path(4)).value == 2);
    CHECK(min_ltd(cycle(5)).value == 3);
    CHECK(min_ltd(cycle(6)).value == 4);
    CHECK(min_td(g_k(4)).value == 2);
    for (int k = 3; k <= 5; ++k) CHECK(min_ltd(g_k(k)).value == k + 2);
    CHECK(min_ltd(pentagon_hub(2)).value == 6);
    CHECK(min_td(pentagon_hub(2)).value == 6);
    for (int n = 7; n <= 12; ++n) CHECK(min_ltd(cycle(n)).value == cycle_formula(n));
    CHECK(min_td(two_corona(complete(2)).graph).value == 4);
    CHECK(min_td(two_corona(complete(3)).graph).value == 6);
}

TEST_CASE("solver errors") {
    Graph with_isolated = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(min_td(with_isolated), infeasible_error);
    CHECK_THROWS_AS(min_ltd(with_isolated), infeasible_error);
    CHECK(min_ld(with_isolated).value == 2); // the isolated vertex joins the set

    Graph big = cycle(70);
    CHECK_THROWS_AS(min_td(big), capability_error);
    CHECK_THROWS_AS(min_ltd(cycle(20), 16), capability_error);
}

TEST_CASE("disconnected graphs solve per component") {
    GraphBuilder b(8);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3); // P_4
    b.add_edge(4, 5).add_edge(5, 6).add_edge(6, 7); // P_4
    Graph g = b.build();
    auto r = min_ltd(g);
    CHECK(r.value == 4);
    CHECK(is_ltd(g, r.witness));
    CHECK(min_td(g).value == 4);
}

TEST_CASE("witnesses satisfy their predicates") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 5));
        auto ld = min_ld(g);
        CHECK(is_dominating(g, ld.witness));
        CHECK(is_locating(g, ld.witness));
        if (!g.has_isolated_vertex()) {
            auto td = min_td(g);
            auto tl = min_ltd(g);
            CHECK(is_total_dominating(g, td.witness));
            CHECK(is_ltd(g, tl.witness));
            CHECK(td.value <= tl.value);
            CHECK(ld.value <= tl.value);
            CHECK(tl.value <= ld.value + td.value); // gamma_t^L <= gamma_L + gamma_t
            auto dom = brute_force_min(g, [](const Graph& gg, const VertexSet& d) {
                return is_dominating(gg, d);
            });
            CHECK(dom.value <= td.value);
            CHECK(dom.value <= ld.value);
        }
    }
}

TEST_CASE("epn-property TD-sets") {
    auto p4 = min_td_with_epn_property(path(4));
    CHECK(p4.value == 2);
    CHECK(p4.witness == VertexSet::of(4, {1, 2}));
    CHECK(epn(path(4), 1, p4.witness).to_vector() == std::vector<int>{0});
    CHECK(epn(path(4), 2, p4.witness).to_vector() == std::vector<int>{3});

    auto c6 = min_td_with_epn_property(cycle(6));
    CHECK(c6.value == min_td(cycle(6)).value);
    CHECK(is_total_dominating(cycle(6), c6.witness));

    Graph p6 = path(6);
    auto r6 = min_td_with_epn_property(p6);
    CHECK(r6.value == 4);
    CHECK(is_total_dominating(p6, r6.witness));
    // at least half the members own an external private neighbor, so the
    // partition has at least |S|/2 parts
    auto part = neighborhood_partition(p6, r6.witness);
    CHECK(2 * part.k >= r6.value);

    CHECK_THROWS_AS(min_td_with_epn_property(complete(4)), std::invalid_argument);
    CHECK_THROWS_AS(min_td_with_epn_property(complete(2)), std::invalid_argument);
    GraphBuilder b(8);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
    b.add_edge(4, 5).add_edge(5, 6).add_edge(6, 7);
    CHECK_THROWS_AS(min_td_with_epn_property(b.build()), std::invalid_argument);
}

TEST_CASE("epn-property value always matches the plain minimum") {
    for (const Graph& g : all_graphs(6)) {
        if (!g.is_connected() || g.order() < 3) continue;
        if (g.edge_count() == static_cast<long long>(g.order()) * (g.order() - 1) / 2) continue;
        auto plain = min_td(g);
        auto prop = min_td_with_epn_property(g);
        CHECK(prop.value == plain.value);
        auto part = neighborhood_partition(g, prop.witness);
        CHECK(2 * part.k >= prop.value);
    }
}

TEST_CASE("brute force oracle semantics") {
    auto td_c4 = brute_force_min(cycle(4), [](const Graph& g, const VertexSet& d) {
        return is_total_dominating(g, d);
    });
    CHECK(td_c4.value == 2);
    CHECK(td_c4.witness == VertexSet::of(4, {0, 1})); // first minimum in index order

    Graph with_isolated = Graph::from_edges(2, {});
    CHECK_THROWS_AS(brute_force_min(with_isolated,
                                    [](const Graph& g, const VertexSet& d) {
                                        return is_total_dominating(g, d);
                                    }),
                    infeasible_error);
    CHECK_THROWS_AS(brute_force_min(cycle(17),
                                    [](const Graph&, const VertexSet&) { return true; }),
                    capability_error);
}

TEST_CASE("solvers agree with the oracle on all small graphs") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            auto ld = min_ld(g);
            auto ld_oracle = brute_force_min(g, [](const Graph& gg, const VertexSet& d) {
                return is_dominating(gg, d) && is_locating(gg, d);
            });
            CHECK(ld.value == ld_oracle.value);
            if (g.has_isolated_vertex()) continue;
            auto td_oracle = brute_force_min(g, [](const Graph& gg, const VertexSet& d) {
                return is_total_dominating(gg, d);
            });
            auto ltd_oracle = brute_force_min(g, [](const Graph& gg, const VertexSet& d) {
                return is_ltd(gg, d);
            });
            CHECK(min_td(g).value == td_oracle.value);
            CHECK(min_ltd(g).value == ltd_oracle.value);
        }
    }
}

TEST_CASE("solvers agree with the oracle on random mid-size graphs") {
    std::mt19937 rng(90210);
    int done = 0;
    while (done < 60) {
        Graph g = random_graph(rng, 8 + static_cast<int>(rng() % 3));
        if (g.has_isolated_vertex()) continue;
        ++done;
        CHECK(min_ltd(g).value ==
              brute_force_min(g, [](const Graph& gg, const VertexSet& d) { return is_ltd(gg, d); }).value);
    }
}

TEST_CASE("explored counters are populated") {
    auto r = min_ltd(cycle(8));
    CHECK(r.explored > 0);
}
