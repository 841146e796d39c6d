#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cplan/embed.hpp"

using namespace cplan;

namespace {

EmbeddedGraph triangle(std::optional<std::pair<VertexId, VertexId>> outer = std::nullopt) {
    return EmbeddedGraph({{1, 2}, {2, 0}, {0, 1}}, outer);
}

// C4 (0,1,2,3) with an apex inside joined to all four; outer face is the quad.
EmbeddedGraph quad_with_inner_apex() {
    return EmbeddedGraph({{1, 3, 4}, {2, 0, 4}, {3, 1, 4}, {0, 2, 4}, {0, 3, 2, 1}},
                         std::make_pair(1, 0));
}

// C4 (0,1,2,3) with an apex (id 5) outside joined to all four.
EmbeddedGraph quad_with_outer_apex() {
    return EmbeddedGraph({{1, 5, 3}, {2, 5, 0}, {3, 5, 1}, {0, 5, 2}, {}, {0, 1, 2, 3}},
                         std::make_pair(0, 5));
}

std::vector<int> sorted_lengths(const EmbeddedGraph& g) {
    auto l = g.faces().lengths;
    std::sort(l.begin(), l.end());
    return l;
}

} // namespace

TEST_CASE("triangle rotation system") {
    auto g = triangle();
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.faces().count() == 2);
    CHECK(g.faces().lengths == std::vector<int>{3, 3});
}

TEST_CASE("K4 planar rotation system has four triangles") {
    EmbeddedGraph g({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
    CHECK(g.faces().count() == 4);
    CHECK(sorted_lengths(g) == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("dart without twin is rejected") {
    CHECK_THROWS_WITH_AS(EmbeddedGraph({{1, 2}, {2}, {0, 1}}, std::nullopt),
                         doctest::Contains("no twin"), Error);
    try {
        EmbeddedGraph({{1, 2}, {2}, {0, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSymmetricRotation);
    }
}

TEST_CASE("validation errors") {
    SUBCASE("disconnected") {
        try {
            EmbeddedGraph({{1}, {0}, {3}, {2}});
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Disconnected);
        }
    }
    SUBCASE("parallel edge") {
        try {
            EmbeddedGraph({{1, 1}, {0, 0}});
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DuplicateEdge);
        }
    }
    SUBCASE("nonplanar K5 rotation") {
        // No rotation system of K5 passes the Euler check.
        std::vector<std::vector<VertexId>> rot(5);
        for (VertexId v = 0; v < 5; ++v)
            for (VertexId w = 0; w < 5; ++w)
                if (w != v) rot[v].push_back(w);
        try {
            EmbeddedGraph g(rot);
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonPlanarEmbedding);
        }
    }
}

TEST_CASE("cube graph has six quadrilateral faces") {
    std::vector<std::vector<VertexId>> rot = {
        {1, 3, 4}, {2, 0, 5}, {3, 1, 6}, {0, 2, 7},
        {0, 7, 5}, {1, 4, 6}, {2, 5, 7}, {3, 6, 4},
    };
    EmbeddedGraph g(rot);
    CHECK(g.faces().count() == 6);
    CHECK(sorted_lengths(g) == std::vector<int>(6, 4));
}

TEST_CASE("path of two edges is a single face of length 4") {
    EmbeddedGraph g({{1}, {0, 2}, {1}});
    CHECK(g.faces().count() == 1);
    CHECK(g.faces().lengths == std::vector<int>{4});
}

TEST_CASE("C6 with one chord has faces 4,4,6") {
    EmbeddedGraph c6({{1, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}});
    // Locate the face traversed as 0,1,2,3,4,5 and insert the (0,3) chord.
    FaceId f = -1;
    for (FaceId i = 0; i < c6.faces().count(); ++i)
        if (c6.face_walk(i) == std::vector<VertexId>{0, 1, 2, 3, 4, 5}) f = i;
    REQUIRE(f >= 0);
    auto g = insert_chords_into_face(c6, f, {{0, 3}});
    CHECK(g.num_edges() == 7);
    CHECK(sorted_lengths(g) == std::vector<int>{4, 4, 6});
}

TEST_CASE("chord insertion") {
    SUBCASE("two chords sharing a corner on a hexagon") {
        EmbeddedGraph c6({{1, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}});
        FaceId f = -1;
        for (FaceId i = 0; i < c6.faces().count(); ++i)
            if (c6.face_walk(i) == std::vector<VertexId>{0, 1, 2, 3, 4, 5}) f = i;
        REQUIRE(f >= 0);
        auto g = insert_chords_into_face(c6, f, {{0, 2}, {0, 4}});
        CHECK(sorted_lengths(g) == std::vector<int>{3, 3, 4, 6});
    }
    SUBCASE("crossing chords are rejected by the Euler check") {
        EmbeddedGraph c4({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
        FaceId f = -1;
        for (FaceId i = 0; i < c4.faces().count(); ++i)
            if (c4.face_walk(i) == std::vector<VertexId>{0, 1, 2, 3}) f = i;
        REQUIRE(f >= 0);
        try {
            insert_chords_into_face(c4, f, {{0, 2}, {1, 3}});
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonPlanarEmbedding);
        }
    }
}

TEST_CASE("merge of two triangles along rho is the triangle") {
    auto g1 = triangle(std::make_pair(0, 1));
    auto g2 = triangle(std::make_pair(0, 1));
    auto rho = Cycle::of(g1, {0, 1, 2});
    auto m = merge_along_cycle(g1, g2, rho);
    CHECK(m.num_vertices() == 3);
    CHECK(m.num_edges() == 3);
}

TEST_CASE("merge of inner and outer apex quads is octahedron-like") {
    auto g1 = quad_with_inner_apex();
    auto g2 = quad_with_outer_apex();
    auto rho = Cycle::of(g1, {0, 1, 2, 3});
    auto m = merge_along_cycle(g1, g2, rho);
    CHECK(m.num_vertices() == 6);
    CHECK(m.num_edges() == 12);
    CHECK(m.faces().count() == 8);

    SUBCASE("side classification") {
        auto sm = classify_sides(m, rho);
        CHECK(sm.inside_vertices == 1);
        CHECK(sm.outside_vertices == 1);
        CHECK(sm.vertex_side[4] == Side::Inside);
        CHECK(sm.vertex_side[5] == Side::Outside);
        CHECK(sm.vertex_side[0] == Side::On);
    }
    SUBCASE("split round-trips both inputs") {
        CHECK(subgraph_side(m, rho, SideSel::Inner) == g1);
        CHECK(subgraph_side(m, rho, SideSel::Outer) == g2);
    }
}

TEST_CASE("merge errors") {
    SUBCASE("designated face of g2 not bounded by rho") {
        auto g1 = quad_with_inner_apex();
        // g2 with apexes on both sides: rho bounds no face at all.
        auto g2 = merge_along_cycle(quad_with_inner_apex(), quad_with_outer_apex(),
                                    Cycle::of(g1, {0, 1, 2, 3}));
        try {
            merge_along_cycle(g1, g2, Cycle::of(g1, {0, 1, 2, 3}));
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::CycleMismatch);
        }
    }
    SUBCASE("vertex clash off rho") {
        auto g1 = quad_with_inner_apex();
        auto g2o = quad_with_inner_apex(); // vertex 4 inside in both
        // Reinterpret g2o with rho bounding an inner face: it does not, so
        // build a real clash: g2 = quad with apex 4 joined outside.
        EmbeddedGraph g2({{1, 4, 3}, {2, 4, 0}, {3, 4, 1}, {0, 4, 2}, {0, 1, 2, 3}},
                         std::make_pair(0, 4));
        try {
            merge_along_cycle(g1, g2, Cycle::of(g1, {0, 1, 2, 3}));
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::VertexClash);
        }
        (void)g2o;
    }
}

TEST_CASE("subgraph_side of bare cycle returns the cycle on both sides") {
    EmbeddedGraph c4({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, std::make_pair(0, 1));
    auto rho = Cycle::of(c4, {0, 1, 2, 3});
    CHECK(subgraph_side(c4, rho, SideSel::Inner) == c4);
    CHECK(subgraph_side(c4, rho, SideSel::Outer) == c4);
}

TEST_CASE("cycle validation") {
    auto g = triangle();
    CHECK_THROWS_AS(Cycle::of(g, {0, 1}), Error);
    CHECK_THROWS_AS(Cycle::of(g, {0, 1, 0}), Error);
    EmbeddedGraph c4({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
    CHECK_THROWS_AS(Cycle::of(c4, {0, 1, 2}), Error); // (2,0) is not an edge
}

TEST_CASE("two-connectivity check") {
    CHECK(is_two_connected(triangle()));
    EmbeddedGraph path({{1}, {0, 2}, {1}});
    CHECK_FALSE(is_two_connected(path));
}

TEST_CASE("face determinism") {
    auto a = quad_with_inner_apex();
    auto b = quad_with_inner_apex();
    CHECK(a.faces().faces == b.faces().faces);
}

TEST_CASE("random polygon chords: merge/split round trip") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 25; ++iter) {
        const int n = 4 + static_cast<int>(rng() % 7);
        std::vector<std::vector<VertexId>> rot(n);
        for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
        EmbeddedGraph cyc(rot, std::make_pair(1, 0));
        FaceId inner = -1;
        std::vector<VertexId> want(n);
        for (int i = 0; i < n; ++i) want[i] = i;
        for (FaceId f = 0; f < cyc.faces().count(); ++f)
            if (cyc.face_walk(f) == want && f != *cyc.outer_face()) inner = f;
        REQUIRE(inner >= 0);
        // Random noncrossing chords via interval recursion.
        std::vector<std::pair<int, int>> chords;
        std::vector<std::pair<int, int>> stack{{0, n - 1}};
        while (!stack.empty()) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            if (hi - lo < 2) continue;
            if (rng() % 2 == 0) continue;
            int a = lo + static_cast<int>(rng() % (hi - lo - 1));
            int b = a + 2 + static_cast<int>(rng() % (hi - a - 1));
            if (b - a >= 2 && b - a != n - 1 && !(a == lo && b == hi)) {
                chords.emplace_back(a, b);
                stack.emplace_back(a, b);
                stack.emplace_back(b, hi);
            }
        }
        auto g = insert_chords_into_face(cyc, inner, chords);
        auto rho = Cycle::of(g, want);
        auto gi = subgraph_side(g, rho, SideSel::Inner);
        auto go = subgraph_side(g, rho, SideSel::Outer);
        auto back = merge_along_cycle(gi, go, rho);
        CHECK(back == g);
    }
}
