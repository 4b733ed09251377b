#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ltdom/domination.hpp"
#include "ltdom/enumerate.hpp"
#include "ltdom/families.hpp"

using namespace ltdom;

TEST_CASE("basic generators") {
    CHECK(cycle(6).edge_count() == 6);
    CHECK(path(4).edge_count() == 3);
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete_bipartite(2, 4).edge_count() == 8);
    CHECK(star_subdivided(2, 3).order() == 7);
    CHECK(star_subdivided(2, 3).edge_count() == 6);
    CHECK(star_subdivided(2, 2).edge_count() == 5); // k+1 + s
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(star_subdivided(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("two corona generator") {
    auto p6 = two_corona(complete(2));
    CHECK(p6.graph.order() == 6);
    CHECK(isomorphic(p6.graph, path(6)));
    CHECK(p6.witness.core.count() == 2);

    auto p3 = two_corona(Graph::from_edges(1, {}));
    CHECK(isomorphic(p3.graph, path(3)));

    auto c3 = two_corona(complete(3));
    CHECK(c3.graph.order() == 9);
    CHECK(c3.witness.pendants.size() == 3);
    for (const auto& p : c3.witness.pendants) {
        CHECK(c3.graph.degree(p.middle) == 2);
        CHECK(c3.graph.degree(p.leaf) == 1);
        CHECK(c3.graph.adjacent(p.core, p.middle));
        CHECK(c3.graph.adjacent(p.middle, p.leaf));
    }
}

TEST_CASE("g_k construction") {
    for (int k = 3; k <= 8; ++k) {
        Graph g = g_k(k);
        CHECK(g.order() == 2 * k + 4);
        CHECK(is_twin_free(g));
        CHECK(g.contains_c4());
        CHECK(g.is_connected());
        // degree profile of the picture: two hub vertices of degree k+2,
        // 2k vertices of degree 2, two leaves
        std::vector<int> degs;
        for (int v = 0; v < g.order(); ++v) degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end());
        CHECK(degs.front() == 1);
        CHECK(degs[1] == 1);
        CHECK(degs.back() == k + 2);
        CHECK(degs[degs.size() - 2] == k + 2);
        CHECK(std::count(degs.begin(), degs.end(), 2) == 2 * k);
    }
    CHECK_THROWS_AS(g_k(2), std::invalid_argument);
}

TEST_CASE("pentagon hub") {
    CHECK(pentagon_hub(2).order() == 11);
    CHECK(pentagon_hub(3).min_degree() == 2);
    CHECK(is_twin_free(pentagon_hub(2)));
    for (int k = 2; k <= 5; ++k) {
        Graph g = pentagon_hub(k);
        CHECK(g.order() == 5 * k + 1);
        CHECK_FALSE(g.contains_c4());
        CHECK(g.is_connected());
        CHECK(is_twin_free(g));
    }
    CHECK_THROWS_AS(pentagon_hub(1), std::invalid_argument);
}

TEST_CASE("two corona recognizer") {
    auto w = is_two_corona(path(6));
    REQUIRE(w.has_value());
    CHECK(w->core.count() == 2);

    CHECK_FALSE(is_two_corona(cycle(6)).has_value());
    CHECK_FALSE(is_two_corona(path(4)).has_value());
    CHECK_FALSE(is_two_corona(complete(3)).has_value());
    CHECK_FALSE(is_two_corona(path(9)).has_value());

    auto p3 = is_two_corona(path(3));
    REQUIRE(p3.has_value());
    CHECK(p3->core.count() == 1);
    REQUIRE(p3->pendants.size() == 1);
    CHECK(p3->pendants[0].leaf == 0); // smaller endpoint is the pendant leaf
    CHECK(p3->pendants[0].core == 2);

    // disconnected input: every component must decompose on its own
    {
        GraphBuilder b(9);
        b.add_edge(0, 1).add_edge(1, 2); // P_3 component
        b.add_edge(3, 4).add_edge(4, 5).add_edge(5, 6).add_edge(6, 7).add_edge(7, 8); // P_6 component
        auto w2 = is_two_corona(b.build());
        REQUIRE(w2.has_value());
        CHECK(w2->core.count() == 3);
    }
    {
        GraphBuilder b(9);
        b.add_edge(0, 1).add_edge(1, 2);
        b.add_edge(3, 4).add_edge(4, 5).add_edge(5, 6).add_edge(6, 7).add_edge(7, 8).add_edge(8, 3); // C_6
        CHECK_FALSE(is_two_corona(b.build()).has_value());
    }
}

TEST_CASE("two corona of disconnected graphs decomposes componentwise") {
    Graph h = Graph::from_edges(3, {{0, 1}}); // K_2 + K_1
    auto tc = two_corona(h);
    auto w = is_two_corona(tc.graph);
    REQUIRE(w.has_value());
    CHECK(w->core.count() == 3);
}

TEST_CASE("generator recognizer round trip on random connected graphs") {
    std::mt19937 rng(20240601);
    int done = 0;
    while (done < 200) {
        int n = 1 + static_cast<int>(rng() % 6);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) b.add_edge(u, v);
        Graph h = b.build();
        if (!h.is_connected()) continue;
        ++done;
        auto tc = two_corona(h);
        CHECK(is_twin_free(tc.graph)); // 2-coronas are always twin-free
        auto w = is_two_corona(tc.graph);
        REQUIRE(w.has_value());
        CHECK(w->core.count() == n);
        auto core_graph = tc.graph.induced_subgraph(w->core).graph;
        CHECK(isomorphic(core_graph, h));
    }
}

TEST_CASE("cycle recognizer") {
    CHECK(is_cycle(cycle(6)) == 6);
    CHECK(is_cycle(cycle(3)) == 3);
    CHECK_FALSE(is_cycle(path(6)).has_value());
    CHECK_FALSE(is_cycle(pentagon_hub(2)).has_value());
    // two disjoint triangles: 2-regular but disconnected
    GraphBuilder b(6);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 0);
    b.add_edge(3, 4).add_edge(4, 5).add_edge(5, 3);
    CHECK_FALSE(is_cycle(b.build()).has_value());
}

TEST_CASE("generators produce connected twin-free-checked graphs") {
    CHECK(two_corona(cycle(4)).graph.is_connected());
    CHECK(g_k(5).is_connected());
    CHECK(star_subdivided(3, 4).is_connected());
}
