#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "ltdom/graph6.hpp"
#include "ltdom/scan.hpp"

using namespace ltdom;

namespace {

// Test-only reference encoder, written against the format description
// independently of the library path (row-major scan, explicit bit list).
std::string reference_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    REQUIRE(n <= 62); // the reference covers the single-byte order form only
    out.push_back(static_cast<char>(63 + n));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int i = 0; i < 6; ++i) value = value * 2 + bits[k + static_cast<std::size_t>(i)];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

std::string data_path(const std::string& name) {
    return std::string(LTDOM_TEST_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("graph6 known encodings") {
    Graph k2 = from_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));
    CHECK(to_graph6(k2) == "A_");

    CHECK(to_graph6(Graph::from_edges(0, {})) == "?");
    CHECK(from_graph6("?").order() == 0);
    CHECK(from_graph6("@").order() == 1);

    // C_4 = 0-1,1-2,2-3,3-0: bits x01=1 x02=0 x12=1 x03=1 x13=0 x23=1
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(to_graph6(c4) == reference_encode(c4));
    CHECK(from_graph6(to_graph6(c4)) == c4);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    try {
        from_graph6("A ");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 1); // ' ' is below 63
    }
    try {
        from_graph6("B");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 1); // missing data byte
    }
    try {
        from_graph6("A__");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 2); // excess byte
    }
    try {
        from_graph6("Aw"); // 'w' = 63 + 0b010111: nonzero padding
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 1);
    }
    CHECK_THROWS_AS(from_graph6(""), parse_error);
}

TEST_CASE("graph6 multi-byte orders") {
    Graph g100 = Graph::from_edges(100, {{0, 99}, {50, 51}});
    std::string enc = to_graph6(g100);
    CHECK(static_cast<unsigned char>(enc[0]) == 126);
    CHECK(static_cast<unsigned char>(enc[1]) != 126);
    Graph back = from_graph6(enc);
    CHECK(back == g100);

    Graph g63 = Graph::from_edges(63, {{0, 62}});
    CHECK(from_graph6(to_graph6(g63)) == g63);

    // order too large for the supported range
    std::string huge;
    huge.push_back(126);
    huge.push_back(126);
    for (int i = 0; i < 6; ++i) huge.push_back(126);
    CHECK_THROWS_AS(from_graph6(huge), capability_error);
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937 rng(98765);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            GraphBuilder b(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2) b.add_edge(u, v);
            Graph g = b.build();
            Graph back = from_graph6(to_graph6(g));
            REQUIRE(back == g);
        }
    }
}

TEST_CASE("graph6 agrees with reference tool output") {
    std::ifstream in(data_path("graph6_reference.tsv"));
    REQUIRE(in.good());
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string g6, nstr, edges;
        std::getline(row, g6, '\t');
        std::getline(row, nstr, '\t');
        std::getline(row, edges, '\t');
        const int n = std::stoi(nstr);
        GraphBuilder b(n);
        std::istringstream es(edges);
        std::string token;
        while (std::getline(es, token, ',')) {
            if (token.empty()) continue;
            auto dash = token.find('-');
            b.add_edge(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
        }
        Graph g = b.build();
        CHECK(to_graph6(g) == g6);       // byte-level agreement with the reference encoder
        CHECK(from_graph6(g6) == g);     // decoding inverts it
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("decode then encode reproduces an externally generated file") {
    std::ifstream in(data_path("ref_n8.g6"));
    REQUIRE(in.good());
    auto lines = read_graph6_lines(in);
    CHECK(lines.size() == 50);
    for (const auto& l : lines) {
        Graph g = from_graph6(l.text);
        CHECK(g.order() == 8);
        CHECK(to_graph6(g) == l.text);
    }
}

TEST_CASE("graph6 stream reader tolerates headers and blank lines") {
    std::istringstream in(">>graph6<<A_\n\nA_\r\n>>graph6<<\nA?\n");
    auto lines = read_graph6_lines(in);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].text == "A_");
    CHECK(lines[0].number == 1);
    CHECK(lines[1].text == "A_");
    CHECK(lines[1].number == 3);
    CHECK(lines[2].text == "A?");
    CHECK(lines[2].number == 5);
}
