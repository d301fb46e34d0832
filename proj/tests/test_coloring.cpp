#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "chroma/coloring.hpp"
#include "chroma/enumerate.hpp"
#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "test_util.hpp"

using namespace chroma;

namespace {

// Canonical initial coloring of the order-6 path: vertices 0,2,4 carry 1,2,1 and
// the last vertex carries 3. Its unique extension fills the gaps with 3s.
PartialColoring path6_initial() {
    return PartialColoring::from_pairs(6, 3, {{0, 1}, {2, 2}, {4, 1}, {5, 3}});
}

}  // namespace

TEST_CASE("partial coloring construction") {
    PartialColoring c = PartialColoring::from_pairs(4, 3, {{0, 1}, {3, 2}});
    CHECK(c.assigned_count() == 2);
    CHECK(c.domain() == std::vector<int>{0, 3});
    CHECK(!c.complete());
    CHECK(c.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {3, 2}});
    CHECK_THROWS_AS(PartialColoring::from_pairs(4, 3, {{0, 4}}), InvalidParameter);
    CHECK_THROWS_AS(PartialColoring::from_pairs(4, 3, {{5, 1}}), InvalidParameter);
    CHECK_THROWS_AS(PartialColoring::from_pairs(4, 3, {{0, 1}, {0, 2}}), InvalidParameter);
}

TEST_CASE("is_proper_partial") {
    Graph p3 = build_path(3);
    CHECK(is_proper_partial(p3, PartialColoring::from_pairs(3, 3, {{0, 1}, {2, 1}})));
    Graph k2(2, {{0, 1}});
    PartialColoring both_one = PartialColoring::empty(2, 3);
    both_one.color = {1, 1};
    CHECK(!is_proper_partial(k2, both_one));
    CHECK(is_proper_partial(build_path(6), path6_initial()));

    PartialColoring bad = PartialColoring::empty(2, 3);
    bad.color = {7, 0};
    CHECK_THROWS_AS(is_proper_partial(k2, bad), InvalidParameter);
}

TEST_CASE("color_lists") {
    Graph star3 = build_star(3);
    auto lists = color_lists(star3, PartialColoring::from_pairs(4, 3, {{1, 1}, {2, 2}, {3, 1}}));
    CHECK(lists.colors_of(0) == std::vector<int>{3});

    Graph lone(1, {});
    CHECK(color_lists(lone, PartialColoring::empty(1, 3)).colors_of(0) == std::vector<int>{1, 2, 3});

    Graph p3 = build_path(3);
    auto ends = color_lists(p3, PartialColoring::from_pairs(3, 3, {{1, 1}}));
    CHECK(ends.colors_of(0) == std::vector<int>{2, 3});
    CHECK(ends.colors_of(2) == std::vector<int>{2, 3});

    PartialColoring improper = PartialColoring::empty(3, 3);
    improper.color = {1, 1, 0};
    CHECK_THROWS_AS(color_lists(p3, improper), ImproperColoring);
}

TEST_CASE("propagate") {
    Graph p6 = build_path(6);
    auto fixed = propagate(p6, path6_initial());
    REQUIRE(fixed.has_value());
    CHECK(fixed->complete());
    CHECK(fixed->color == std::vector<int>{1, 3, 2, 3, 1, 3});

    Graph k2(2, {{0, 1}});
    auto same = propagate(k2, PartialColoring::from_pairs(2, 3, {{0, 1}}));
    REQUIRE(same.has_value());
    CHECK(same->color == std::vector<int>{1, 0});

    Graph tri = build_cycle(3);
    CHECK(!propagate(tri, PartialColoring::from_pairs(3, 2, {{0, 1}, {1, 2}})).has_value());
}

TEST_CASE("count_extensions on fixtures") {
    Graph tri = build_cycle(3);
    ExtensionCount c = count_extensions(tri, PartialColoring::empty(3, 3));
    CHECK(c.multiple());
    CHECK(c.to_string() == "AtLeast(2)");
    CHECK(count_extensions(tri, PartialColoring::empty(3, 3), 100).count == 6);

    Graph k34 = build_complete_bipartite(3, 4);
    auto one = count_extensions(k34, PartialColoring::from_pairs(7, 3, {{0, 1}, {1, 2}, {2, 2}}));
    CHECK(one.exactly_one());

    Graph p3 = build_path(3);
    CHECK(count_extensions(p3, PartialColoring::from_pairs(3, 3, {{1, 1}})).multiple());

    PartialColoring improper = PartialColoring::empty(3, 3);
    improper.color = {1, 1, 0};
    CHECK_THROWS_AS(count_extensions(tri, improper), ImproperColoring);
    CHECK_THROWS_AS(count_extensions(tri, PartialColoring::empty(3, 3), 1), InvalidParameter);
}

TEST_CASE("count_extensions degenerate color counts") {
    CHECK(count_extensions(Graph(1, {}), PartialColoring::empty(1, 1)).exactly_one());
    CHECK(count_extensions(Graph(2, {}), PartialColoring::empty(2, 1)).exactly_one());
    CHECK(count_extensions(Graph(2, {{0, 1}}), PartialColoring::empty(2, 1)).zero());
    // k above n is fine
    CHECK(count_extensions(build_cycle(3), PartialColoring::empty(3, 5), 100).count == 60);
}

TEST_CASE("unique_extension") {
    Graph p6 = build_path(6);
    PartialColoring full = unique_extension(p6, path6_initial());
    CHECK(full.color == std::vector<int>{1, 3, 2, 3, 1, 3});

    // pendants of one bistar center use colors {1,2}, of the other {1,3}
    Graph b32 = build_bistar(3, 2);
    PartialColoring initial =
        PartialColoring::from_pairs(7, 3, {{2, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 3}});
    PartialColoring ext = unique_extension(b32, initial);
    CHECK(ext.color[0] == 3);
    CHECK(ext.color[1] == 2);

    Graph k2(2, {{0, 1}});
    CHECK_THROWS_AS(unique_extension(k2, PartialColoring::from_pairs(2, 3, {{0, 1}})), NotUnique);
    Graph tri = build_cycle(3);
    CHECK_THROWS_AS(unique_extension(tri, PartialColoring::empty(3, 2)), NotExtendable);
}

TEST_CASE("chromatic and clique numbers") {
    CHECK(chromatic_number(build_cycle(4)) == 2);
    CHECK(chromatic_number(build_cycle(3)) == 3);
    CHECK(chromatic_number(build_cycle(7)) == 3);
    CHECK(chromatic_number(Graph(1, {})) == 1);
    CHECK(chromatic_number(attach_clique(build_path(6), 2, 3, 5)) == 5);

    CHECK(clique_number(build_cycle(6)) == 2);
    CHECK(clique_number(build_complete_bipartite(3, 4)) == 2);
    CHECK(clique_number(attach_clique(build_path(6), 2, 3, 5)) == 5);
    CHECK_THROWS_AS(clique_number(corona(build_path(7), 2)), LimitExceeded);
    CHECK(clique_number(corona(build_path(7), 2), 32) == 2);
}

TEST_CASE("chromatic number is at least the clique number on small graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n))
            CHECK(chromatic_number(g) >= clique_number(g));
}

TEST_CASE("bipartiteness agrees with 2-colorability") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n))
            CHECK(is_bipartite(g) == (chromatic_number(g) <= 2));
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected_bipartite(n)) CHECK(chromatic_number(g) <= 2);
}

TEST_CASE("count agrees with the naive fixed-order oracle") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 8;
        Graph g = testutil::random_graph(rng, n, 0.4);
        int k = 1 + trial % 4;
        PartialColoring c = testutil::random_proper_partial(rng, g, k, 0.5);
        long long cap = 2 + trial % 7;
        CHECK(count_extensions(g, c, cap).count == testutil::naive_count(g, c, cap));
    }
}

TEST_CASE("color permutation invariance") {
    std::mt19937 rng(992);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 8;
        int k = 2 + trial % 3;
        Graph g = testutil::random_graph(rng, n, 0.4);
        PartialColoring c = testutil::random_proper_partial(rng, g, k, 0.5);
        std::vector<int> perm(k + 1);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        PartialColoring permuted = c;
        for (auto& col : permuted.color) col = perm[col];
        CHECK(count_extensions(g, c, 5).count == count_extensions(g, permuted, 5).count);
    }
}

TEST_CASE("propagation preserves the extension count") {
    std::mt19937 rng(993);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 8;
        int k = 1 + trial % 4;
        Graph g = testutil::random_graph(rng, n, 0.45);
        PartialColoring c = testutil::random_proper_partial(rng, g, k, 0.4);
        long long before = count_extensions(g, c, 4).count;
        auto after = propagate(g, c);
        if (!after.has_value()) {
            CHECK(before == 0);  // a reported contradiction always means nothing extends
        } else {
            CHECK(count_extensions(g, *after, 4).count == before);
            CHECK(is_proper_partial(g, *after));
        }
    }
}

TEST_CASE("witnesses stay unique on supersets") {
    std::mt19937 rng(994);
    int confirmed = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + trial % 6;
        int k = 2 + trial % 3;
        Graph g = testutil::random_graph(rng, n, 0.5);
        PartialColoring c = testutil::random_proper_partial(rng, g, k, 0.6);
        std::vector<int> full;
        if (detail::count_extensions_raw(g, c, 2, &full) != 1) continue;
        ++confirmed;
        PartialColoring grown{k, full};
        std::bernoulli_distribution keep(0.5);
        for (int v = 0; v < n; ++v)
            if (c.color[v] == 0 && !keep(rng)) grown.color[v] = 0;  // still a superset of the domain
        CHECK(count_extensions(g, grown, 2).exactly_one());
    }
    CHECK(confirmed > 20);
}

TEST_CASE("paths with two adjacent uncolored vertices are never uniquely extendable") {
    std::mt19937 rng(995);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 7;
        Graph p = build_path(n);
        PartialColoring c = testutil::random_proper_partial(rng, p, 3, 0.5);
        int gap = std::uniform_int_distribution<int>(0, n - 2)(rng);
        c.color[gap] = 0;
        c.color[gap + 1] = 0;
        CHECK(!count_extensions(p, c, 2).exactly_one());
    }
}

TEST_CASE("uncolored cycles always have at least two 3-colorings") {
    for (int n = 3; n <= 9; ++n)
        CHECK(count_extensions(build_cycle(n), PartialColoring::empty(n, 3)).multiple());
}
