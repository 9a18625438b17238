#include "cutcount/fpt.hpp"
#include "cutcount/oracle.hpp"
#include "doctest.h"
#include "small_graphs.hpp"

using namespace cutcount;

TEST_CASE("fvs_3k on triangles") {
    auto tri = small::cycle(3);
    auto r = fvs_3k(tri, 1);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(r.solution.size() == 1);
    CHECK(is_feedback_vertex_set(tri, r.solution));
    auto two = small::graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    for (uint64_t s = 1; s <= 5; ++s) {
        FptOptions o;
        o.seed = s;
        CHECK(fvs_3k(two, 1, o).verdict == Verdict::Unknown);
    }
    auto r2 = fvs_3k(two, 2);
    REQUIRE(r2.verdict == Verdict::Yes);
    CHECK(is_feedback_vertex_set(two, r2.solution));
}

TEST_CASE("cvc_2k") {
    auto e = small::path(2);
    auto r = cvc_2k(e, 1);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(is_connected_vertex_cover(e, r.solution));
    auto c4 = small::cycle(4);
    auto r4 = cvc_2k(c4, 2);
    CHECK(r4.verdict == Verdict::Unknown);  // any two vertices leave an edge uncovered or are not adjacent
    auto r3 = cvc_2k(c4, 3);
    REQUIRE(r3.verdict == Verdict::Yes);
    CHECK(is_connected_vertex_cover(c4, r3.solution));
    CHECK(r3.solution.size() <= 3);
}

TEST_CASE("cfvs_3k") {
    auto pendant = small::graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto r = cfvs_3k(pendant, 1);
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(is_connected_feedback_vertex_set(pendant, r.solution));
    auto forest = small::path(5);
    auto f = cfvs_3k(forest, 0);
    CHECK(f.verdict == Verdict::Yes);
    CHECK(f.solution.empty());
}

TEST_CASE("witness checkers") {
    auto c4 = small::cycle(4);
    CHECK(is_feedback_vertex_set(c4, {2}));
    CHECK_FALSE(is_feedback_vertex_set(c4, {}));
    CHECK(is_connected_vertex_cover(c4, {0, 1, 2}));
    CHECK_FALSE(is_connected_vertex_cover(c4, {0, 2}));
    CHECK(is_connected_feedback_vertex_set(c4, {1}));
}

TEST_CASE("fpt solvers agree with the oracle and stay inside the cell bound") {
    Rng rng(5);
    for (int it = 0; it < 12; ++it) {
        int n = 4 + static_cast<int>(rng() % 6);
        UndirectedGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 40) g.add_edge(u, v);
        for (int v = 1; v < n; ++v)
            if (!is_connected(g) && !g.has_edge(v - 1, v)) g.add_edge(v - 1, v);
        int k = 1 + static_cast<int>(rng() % 3);
        FptOptions o;
        o.seed = static_cast<uint64_t>(it);
        auto a = fvs_3k(g, k, o);
        auto b = cvc_2k(g, k, o);
        auto c = cfvs_3k(g, k, o);
        CHECK((a.verdict == Verdict::Yes) == (oracle_fvs_min(g, {}) <= k));
        CHECK((b.verdict == Verdict::Yes) == (oracle_cvc_min(g, {}) <= k));
        CHECK((c.verdict == Verdict::Yes) == (oracle_cfvs_min(g, {}) <= k));
        for (auto* r : {&a, &b, &c}) CHECK(r->stats.peak_cells <= r->stats.cell_bound);
    }
}
