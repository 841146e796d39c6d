#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cplan/cgraph.hpp"

using namespace cplan;

namespace {

EmbeddedGraph c4() { return EmbeddedGraph({{1, 3}, {2, 0}, {3, 1}, {0, 2}}); }

// K4 drawn as a triangle 0,1,2 with vertex 3 inside.
EmbeddedGraph k4() { return EmbeddedGraph({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}); }

FaceId face_with_walk(const EmbeddedGraph& g, const std::vector<VertexId>& walk) {
    for (FaceId f = 0; f < g.faces().count(); ++f)
        if (g.face_walk(f) == walk) return f;
    return -1;
}

EmbeddedGraph designate_outer(const EmbeddedGraph& g, FaceId f) {
    const DartId d = g.faces().faces[f][0];
    return g.with_outer(std::make_pair(g.tail(d), g.head(d)));
}

// Triangle 0,1,2 with an inner apex 3 and an outer apex 4, both joined to
// all three corners.
EmbeddedGraph triangle_two_apexes() {
    auto g1 = k4();
    FaceId tri = face_with_walk(g1, {0, 1, 2});
    REQUIRE(tri >= 0);
    g1 = designate_outer(g1, tri);
    EmbeddedGraph g2({{2, 4, 1}, {0, 4, 2}, {1, 4, 0}, {}, {2, 1, 0}}, std::make_pair(0, 4));
    return merge_along_cycle(g1, g2, Cycle::of(g1, {0, 1, 2}));
}

// All simple cycles of the subgraph induced by cluster mu, as vertex lists.
std::vector<std::vector<VertexId>> monochromatic_cycles(const CGraph& cg, ClusterId mu) {
    const EmbeddedGraph& g = cg.graph;
    std::vector<std::vector<VertexId>> out;
    std::vector<char> in_path(g.id_bound(), 0);
    std::vector<VertexId> path;
    auto dfs = [&](auto&& self, VertexId s, VertexId v) -> void {
        for (VertexId w : g.rotation(v)) {
            if (cg.cluster_of[w] != mu) continue;
            if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (w <= s || in_path[w]) continue;
            in_path[w] = 1;
            path.push_back(w);
            self(self, s, w);
            path.pop_back();
            in_path[w] = 0;
        }
    };
    for (VertexId s : g.vertices()) {
        if (cg.cluster_of[s] != mu) continue;
        path = {s};
        in_path[s] = 1;
        dfs(dfs, s, s);
        in_path[s] = 0;
    }
    return out;
}

// Definitionally direct condition (ii) for one outer-face choice: no cycle
// of any G(mu) may have a foreign vertex strictly inside.
bool condition_ii_brute(const CGraph& cg, FaceId outer) {
    auto g = designate_outer(cg.graph, outer);
    for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) {
        for (const auto& cyc : monochromatic_cycles(cg, mu)) {
            const SideMap sm = classify_sides(g, Cycle::of(g, cyc));
            for (VertexId x : g.vertices())
                if (cg.cluster_of[x] != mu && sm.vertex_side[x] == Side::Inside) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("cluster components") {
    SUBCASE("C4 with alternating clusters splits both clusters") {
        CGraph cg(c4(), {0, 1, 0, 1}, 2);
        auto cc = cluster_components(cg);
        REQUIRE(cc.components[0].size() == 2);
        REQUIRE(cc.components[1].size() == 2);
        CHECK(cc.disconnected_cluster_count() == 2);
        CHECK(cc.component_of[0] != cc.component_of[2]);
        CHECK(cc.component_of[1] != cc.component_of[3]);
        CHECK_FALSE(cc.is_connected(0));
    }
    SUBCASE("single cluster on a connected graph") {
        CGraph cg(k4(), {0, 0, 0, 0}, 1);
        auto cc = cluster_components(cg);
        CHECK(cc.components[0].size() == 1);
        CHECK(cc.is_connected(0));
        CHECK(cc.components[0][0] == std::vector<VertexId>{0, 1, 2, 3});
    }
    SUBCASE("adjacent same-cluster vertices share a component") {
        CGraph cg(c4(), {0, 0, 1, 1}, 2);
        auto cc = cluster_components(cg);
        CHECK(cc.is_connected(0));
        CHECK(cc.is_connected(1));
    }
}

TEST_CASE("clustered graph validation") {
    CHECK_THROWS_AS(CGraph(c4(), {0, 1, 0, 2}, 2), Error);
    CHECK_THROWS_AS(CGraph(c4(), {0, 1, 0}, 2), Error);
    CHECK_THROWS_AS(CGraph(c4(), {0, 0, 0, 0}, 0), Error);
}

TEST_CASE("condition (ii)") {
    SUBCASE("one cluster is always admissible") {
        CGraph cg(k4(), {0, 0, 0, 0}, 1);
        auto out = check_condition_ii(cg);
        CHECK(out.ok);
        CHECK(static_cast<int>(out.admissible_outer_faces.size()) == cg.graph.faces().count());
    }
    SUBCASE("triangle cluster enclosing a foreign vertex") {
        const FaceId tri = face_with_walk(k4(), {0, 1, 2});
        REQUIRE(tri >= 0);
        // Outer face on the empty side of the triangle: vertex 3 is enclosed.
        CGraph bad(designate_outer(k4(), tri), {0, 0, 0, 1}, 2);
        auto out = check_condition_ii(bad);
        CHECK_FALSE(out.ok);
        REQUIRE(out.violation.has_value());
        CHECK(out.violation->cluster == 0);
        CHECK(out.violation->enclosed_vertex == 3);
        // Any face incident to vertex 3 works instead.
        for (FaceId f = 0; f < k4().faces().count(); ++f) {
            if (f == tri) continue;
            CGraph good(designate_outer(k4(), f), {0, 0, 0, 1}, 2);
            CHECK(check_condition_ii(good).ok);
        }
    }
    SUBCASE("without a designated outer face every face is tried") {
        CGraph cg(k4(), {0, 0, 0, 1}, 2);
        auto out = check_condition_ii(cg);
        CHECK(out.ok);
        CHECK(out.admissible_outer_faces.size() == 3);
        const FaceId tri = face_with_walk(cg.graph, {0, 1, 2});
        CHECK(std::find(out.admissible_outer_faces.begin(), out.admissible_outer_faces.end(),
                        tri) == out.admissible_outer_faces.end());
    }
    SUBCASE("invariant under cluster relabeling") {
        CGraph a(k4(), {0, 0, 0, 1}, 2);
        CGraph b(k4(), {1, 1, 1, 0}, 2);
        CHECK(check_condition_ii(a).admissible_outer_faces ==
              check_condition_ii(b).admissible_outer_faces);
    }
}

TEST_CASE("cluster separator") {
    SUBCASE("foreign vertices on both sides of a monochromatic triangle") {
        auto g = triangle_two_apexes();
        CHECK(g.num_vertices() == 5);
        CGraph cg(g, {0, 0, 0, 1, 1}, 2);
        CHECK(is_cluster_separator(cg, Cycle::of(g, {0, 1, 2})));
    }
    SUBCASE("cluster meeting rho does not separate") {
        auto g = triangle_two_apexes();
        CGraph cg(g, {0, 0, 1, 1, 1}, 2);
        CHECK_FALSE(is_cluster_separator(cg, Cycle::of(g, {0, 1, 2})));
    }
    SUBCASE("foreign vertices on one side only") {
        auto g = designate_outer(k4(), face_with_walk(k4(), {0, 1, 2}));
        CGraph cg(g, {0, 0, 0, 1}, 2);
        CHECK_FALSE(is_cluster_separator(cg, Cycle::of(g, {0, 1, 2})));
    }
    SUBCASE("cycle with no strict interior vertices") {
        EmbeddedGraph c6({{1, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}}, std::make_pair(0, 5));
        CGraph cg(c6, {0, 1, 0, 1, 0, 1}, 2);
        CHECK_FALSE(is_cluster_separator(cg, Cycle::of(c6, {0, 1, 2, 3, 4, 5})));
    }
}

TEST_CASE("enclosure equals brute-force monochromatic cycle search") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 4 + static_cast<int>(rng() % 7);
        std::vector<std::vector<VertexId>> rot(n);
        for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
        EmbeddedGraph cyc(rot, std::make_pair(1, 0));
        std::vector<VertexId> want(n);
        for (int i = 0; i < n; ++i) want[i] = i;
        FaceId inner = -1;
        for (FaceId f = 0; f < cyc.faces().count(); ++f)
            if (cyc.face_walk(f) == want && f != *cyc.outer_face()) inner = f;
        REQUIRE(inner >= 0);
        std::vector<std::pair<int, int>> chords;
        for (int a = 0; a < n && chords.size() < 2; ++a) {
            int b = a + 2 + static_cast<int>(rng() % (n - 3));
            if (b < n && b - a != n - 1 && rng() % 2 == 0) chords.emplace_back(a, b);
            if (!chords.empty() && chords.back().first != a) break;
        }
        // Keep only a noncrossing prefix.
        std::vector<std::pair<int, int>> keep;
        for (auto [a, b] : chords) {
            bool ok = true;
            for (auto [c, d] : keep)
                if ((c < a && a < d && d < b) || (a < c && c < b && b < d)) ok = false;
            if (ok) keep.emplace_back(a, b);
        }
        auto g = insert_chords_into_face(cyc, inner, keep).with_outer(std::nullopt);
        const int k = 2 + static_cast<int>(rng() % 2);
        std::vector<ClusterId> cl(g.id_bound());
        for (VertexId v : g.vertices()) cl[v] = static_cast<ClusterId>(rng() % k);
        for (int c = 0; c < k; ++c) cl[c % g.id_bound()] = c; // every id used
        CGraph cg(g, cl, k);
        auto out = check_condition_ii(cg);
        for (FaceId f = 0; f < g.faces().count(); ++f) {
            const bool admissible =
                std::find(out.admissible_outer_faces.begin(), out.admissible_outer_faces.end(),
                          f) != out.admissible_outer_faces.end();
            CHECK(admissible == condition_ii_brute(cg, f));
        }
    }
}
