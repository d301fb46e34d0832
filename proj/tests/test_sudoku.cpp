#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chroma/coloring.hpp"
#include "chroma/enumerate.hpp"
#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/sudoku.hpp"
#include "test_util.hpp"

using namespace chroma;

TEST_CASE("is_sudoku_coloring fixtures") {
    // even cycle fixture: alternate 1,2 on odd positions, then 3
    Graph c6 = build_cycle(6);
    CHECK(is_sudoku_coloring(c6, PartialColoring::from_pairs(6, 3, {{0, 1}, {2, 2}, {4, 3}})));

    Graph star6 = build_star(6);
    CHECK(is_sudoku_coloring(
        star6, PartialColoring::from_pairs(7, 3, {{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 2}})));

    Graph p4 = build_path(4);
    CHECK(!is_sudoku_coloring(p4, PartialColoring::from_pairs(4, 3, {{1, 1}})));

    CHECK_THROWS_AS(is_sudoku_coloring(build_cycle(3), PartialColoring::from_pairs(3, 2, {{0, 1}})),
                    ChromaticViolation);
    PartialColoring improper = PartialColoring::empty(4, 3);
    improper.color = {1, 1, 0, 0};
    CHECK_THROWS_AS(is_sudoku_coloring(p4, improper), ImproperColoring);
}

TEST_CASE("required vertices") {
    CHECK(required_vertices(build_bistar(3, 2), 3) == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(required_vertices(build_cycle(6), 3).empty());
    CHECK(required_vertices(build_path(6), 4) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(required_vertices(build_path(3), 1), InvalidParameter);
}

TEST_CASE("constraint edges") {
    CHECK(constraint_edges(build_path(6), 3).size() == 5);
    CHECK(constraint_edges(build_cycle(6), 3).size() == 6);
    CHECK(constraint_edges(build_complete_bipartite(3, 4), 3).empty());
}

TEST_CASE("lower bound") {
    CHECK(lower_bound(build_path(6), 3) == 4);
    CHECK(lower_bound(build_cycle(8), 3) == 4);
    CHECK(lower_bound(build_complete_bipartite(3, 4), 3) == 0);
}

TEST_CASE("sudoku numbers of fixtures") {
    CHECK(sudoku_number(build_path(6), 3).sn == 4);
    CHECK(sudoku_number(build_cycle(4), 3).sn == 2);
    CHECK(sudoku_number(Graph(1, {}), 3).sn == 1);
    CHECK(sudoku_number(build_cycle(4), 4).sn == 4);
    CHECK(sudoku_number(build_complete_bipartite(3, 4), 3).sn == 3);
}

TEST_CASE("two colors pin a connected bipartite graph from one vertex") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_connected_bipartite(n)) CHECK(sudoku_number(g, 2).sn == 1);
    CHECK(sudoku_number(Graph(1, {}), 2).sn == 1);
}

TEST_CASE("chromatic-k variant") {
    CHECK(sudoku_number_chromatic(Graph(2, {{0, 1}})).sn == 1);
    CHECK(sudoku_number_chromatic(build_cycle(4)).sn == 1);
    CHECK(sudoku_number_chromatic(attach_clique(build_path(6), 2, 3, 3)).sn == 4);
    // complete graph of order 4: any two colored vertices leave a swappable pair
    CHECK(sudoku_number_chromatic(attach_clique(Graph(2, {{0, 1}}), 0, 1, 4)).sn == 3);
}

TEST_CASE("certificates verify independently and break when mutated") {
    for (const Graph& g : {build_path(6), build_bistar(2, 2), build_complete_bipartite(2, 3)}) {
        SnResult r = sudoku_number(g, 3);
        std::string why;
        CHECK(verify_certificate(g, r.certificate, &why));

        SudokuCertificate wrong_ext = r.certificate;
        // recolor one non-witness vertex in the claimed extension
        for (int v = 0; v < g.order(); ++v)
            if (wrong_ext.initial.color[v] == 0) {
                wrong_ext.full.color[v] = wrong_ext.full.color[v] % 3 + 1;
                break;
            }
        CHECK(!verify_certificate(g, wrong_ext, &why));

        SudokuCertificate dropped = r.certificate;
        REQUIRE(!dropped.witness.empty());
        int gone = dropped.witness.back();
        dropped.witness.pop_back();
        dropped.initial.color[gone] = 0;
        CHECK(!verify_certificate(g, dropped, &why));
    }
}

TEST_CASE("witness tie-break is lexicographically minimal") {
    SnResult r = sudoku_number(build_path(6), 3);
    CHECK(r.certificate.witness == std::vector<int>{0, 1, 3, 5});
    CHECK(r.certificate.initial.pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 1}, {5, 2}});

    // the winning initial coloring is canonical: first vertex color 1, new
    // colors introduced in order
    int seen = 0;
    for (auto [v, c] : r.certificate.initial.pairs()) {
        CHECK(c <= seen + 1);
        seen = std::max(seen, c);
    }
}

TEST_CASE("deterministic across thread counts") {
    for (const Graph& g : {build_path(7), build_complete_bipartite(3, 3), build_cycle(6)}) {
        SnResult a = sudoku_number(g, 3, SearchOptions{14, 1});
        SnResult b = sudoku_number(g, 3, SearchOptions{14, 4});
        CHECK(a.sn == b.sn);
        CHECK(a.certificate.witness == b.certificate.witness);
        CHECK(a.certificate.initial == b.certificate.initial);
        CHECK(a.certificate.full == b.certificate.full);
        CHECK(a.stats.subsets_examined == b.stats.subsets_examined);
        CHECK(a.stats.colorings_examined == b.stats.colorings_examined);
    }
}

TEST_CASE("pruned search agrees with the unpruned reference on all small connected graphs") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : enumerate_connected_graphs(n)) {
            int chi = chromatic_number(g);
            for (int k = chi; k <= chi + 1; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(sudoku_number(g, k).sn == testutil::reference_sudoku_number(g, k));
            }
        }
    }
}

TEST_CASE("pruned search agrees with the unpruned reference at high k") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : enumerate_connected_graphs(n)) {
            int delta = max_degree(g);
            for (int k = delta + 2; k <= delta + 3; ++k)
                CHECK(sudoku_number(g, k).sn == testutil::reference_sudoku_number(g, k));
        }
    }
}

TEST_CASE("errors: chromatic violation and search limit") {
    CHECK_THROWS_AS(sudoku_number(build_cycle(3), 2), ChromaticViolation);
    CHECK_THROWS_AS(sudoku_number(build_path(20), 3), LimitExceeded);
    CHECK_THROWS_AS(sudoku_number(build_path(16), 3, SearchOptions{10, 1}), LimitExceeded);
    // with every vertex forced the same order is fine
    CHECK(sudoku_number(build_path(20), 4).sn == 20);
}

TEST_CASE("disconnected graphs are solved with a warning and add up componentwise") {
    Graph two_paths(5, {{0, 1}, {2, 3}, {3, 4}});  // P_2 + P_3
    SnResult r = sudoku_number(two_paths, 3);
    CHECK(r.disconnected_input);
    CHECK(r.sn == sudoku_number(build_path(2), 3).sn + sudoku_number(build_path(3), 3).sn);
    CHECK(!sudoku_number(build_path(4), 3).disconnected_input);

    std::mt19937 rng(996);
    for (int trial = 0; trial < 40; ++trial) {
        int n1 = 1 + trial % 4, n2 = 1 + (trial / 4) % 4;
        Graph a = testutil::random_graph(rng, n1, 0.6);
        Graph b = testutil::random_graph(rng, n2, 0.6);
        std::vector<Edge> es = a.edges();
        for (const auto& e : b.edges()) es.push_back(Edge{e.u + n1, e.v + n1});
        Graph both(n1 + n2, std::move(es));
        int k = std::max({3, chromatic_number(a), chromatic_number(b)});
        CHECK(sudoku_number(both, k).sn == sudoku_number(a, k).sn + sudoku_number(b, k).sn);
    }
}

TEST_CASE("lower bound sandwiches the true value") {
    std::mt19937 rng(997);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + trial % 6;
        Graph g = testutil::random_graph(rng, n, 0.45);
        int k = std::max(2, chromatic_number(g) + trial % 2);
        SnResult r = sudoku_number(g, k);
        CHECK(lower_bound(g, k) <= r.sn);
        CHECK(r.sn <= g.order());
    }
}

TEST_CASE("stats are populated") {
    SnResult r = sudoku_number(build_path(6), 3);
    CHECK(r.stats.subsets_examined > 0);
    CHECK(r.stats.colorings_examined > 0);
    CHECK(r.stats.elapsed_ms >= 0);
}
