// Regenerates the bundled corpus of connected C4-free graphs on 9 vertices
// (tests/data/c4free_connected_9.g6). Usage: make_c4free_corpus [N] > file
#include <iostream>
#include <string>

#include "ltdom/enumerate.hpp"
#include "ltdom/graph6.hpp"

int main(int argc, char** argv) {
    int n = 9;
    if (argc > 1) n = std::stoi(argv[1]);
    std::size_t total = 0, emitted = 0;
    for (const ltdom::Graph& g : ltdom::all_c4_free_graphs(n)) {
        ++total;
        if (!g.is_connected()) continue;
        ++emitted;
        std::cout << ltdom::to_graph6(g) << "\n";
    }
    std::cerr << "c4-free graphs on " << n << " vertices: " << total << " (connected: " << emitted
              << ")\n";
    return 0;
}
