#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "cplan/separator.hpp"

using namespace cplan;

namespace {

// Concentric rings of a fixed circumference, level 0 outermost, joined by
// spokes; ring == 3 gives the nested-triangles family.
EmbeddedGraph cylinder(int levels, int ring) {
    std::vector<std::vector<VertexId>> rot(levels * ring);
    for (int i = 0; i < levels; ++i)
        for (int j = 0; j < ring; ++j) {
            const VertexId v = i * ring + j;
            const VertexId nxt = i * ring + (j + 1) % ring;
            const VertexId prv = i * ring + (j + ring - 1) % ring;
            if (i == 0)
                rot[v] = {nxt, v + ring, prv};
            else if (i == levels - 1)
                rot[v] = {nxt, prv, v - ring};
            else
                rot[v] = {nxt, v + ring, prv, v - ring};
        }
    return EmbeddedGraph(std::move(rot), std::make_pair(0, 1));
}

EmbeddedGraph nested_triangles(int levels) { return cylinder(levels, 3); }

// Polygon plus random noncrossing chords, always 2-connected.
EmbeddedGraph random_instance(int n, std::mt19937& rng, int chords) {
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = {(v + 1) % n, (v + n - 1) % n};
    EmbeddedGraph g(std::move(rot), std::make_pair(0, 1));
    for (int step = 0; step < chords; ++step) {
        std::vector<FaceId> big;
        for (FaceId f = 0; f < g.faces().count(); ++f)
            if (g.faces().lengths[f] >= 4 && f != *g.outer_face()) big.push_back(f);
        if (big.empty()) break;
        const FaceId f = big[rng() % big.size()];
        const auto walk = g.face_walk(f);
        const int L = static_cast<int>(walk.size());
        for (int tries = 0; tries < 20; ++tries) {
            const int p = static_cast<int>(rng() % L);
            const int q = static_cast<int>(rng() % L);
            const int d = (q - p + L) % L;
            if (d < 2 || d == L - 1) continue;
            if (walk[p] == walk[q] || g.has_edge(walk[p], walk[q])) continue;
            g = insert_chords_into_face(g, f, {{p, q}});
            break;
        }
    }
    return g;
}

int max_face_length(const EmbeddedGraph& g) {
    return *std::max_element(g.faces().lengths.begin(), g.faces().lengths.end());
}

void check_report(const EmbeddedGraph& g, const SeparatorReport& rep) {
    const int n = g.num_vertices();
    CHECK(rep.size == rep.cycle.size());
    CHECK(rep.size >= 3);
    CHECK(rep.inside_count + rep.outside_count + rep.size == n);
    CHECK(rep.max_side() <= (2 * n + 2) / 3);
    const auto& vs = rep.cycle.verts;
    for (size_t i = 0; i < vs.size(); ++i)
        CHECK(g.has_edge(vs[i], vs[(i + 1) % vs.size()]));
}

} // namespace

TEST_CASE("three nested triangles split at the middle one") {
    const EmbeddedGraph g = nested_triangles(3);
    const SeparatorReport rep = cycle_separator(g);
    CHECK(rep.cycle == Cycle::of(g, {3, 4, 5}));
    CHECK(rep.inside_count == 3);
    CHECK(rep.outside_count == 3);
    CHECK(rep.size == 3);
}

TEST_CASE("cylinder grid stays balanced; interior level cycles qualify") {
    const EmbeddedGraph g = cylinder(5, 8);
    const int n = g.num_vertices();
    for (int lvl = 1; lvl <= 3; ++lvl) {
        std::vector<VertexId> ring;
        for (int j = 0; j < 8; ++j) ring.push_back(lvl * 8 + j);
        const SideMap sm = classify_sides(g, Cycle::of(g, ring));
        CHECK(std::max(sm.inside_vertices, sm.outside_vertices) <= (2 * n + 2) / 3);
    }
    check_report(g, cycle_separator(g));
}

TEST_CASE("too small and connectivity preconditions") {
    const EmbeddedGraph tri({{1, 2}, {2, 0}, {0, 1}}, std::make_pair(0, 1));
    CHECK_THROWS_WITH_AS(cycle_separator(tri), doctest::Contains("threshold"), Error);
    CHECK_THROWS_AS(cycle_separator(nested_triangles(3), 10), Error);

    const EmbeddedGraph bowtie({{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}},
                               std::make_pair(0, 1));
    try {
        cycle_separator(bowtie);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTwoConnected);
    }

    std::vector<std::vector<VertexId>> rot(8);
    for (int v = 0; v < 8; ++v) rot[v] = {(v + 1) % 8, (v + 7) % 8};
    CHECK_THROWS_AS(cycle_separator(EmbeddedGraph(std::move(rot))), Error); // no outer face
}

TEST_CASE("random polygon-with-chords corpus: balance, edges, determinism") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 25; ++it) {
        const int n = 20 + static_cast<int>(rng() % 100);
        const EmbeddedGraph g = random_instance(n, rng, n / 3);
        const SeparatorReport rep = cycle_separator(g);
        check_report(g, rep);
        CHECK(rep.size <= 8 * max_face_length(g) * std::sqrt(static_cast<double>(n)));
        const SeparatorReport again = cycle_separator(g);
        CHECK(rep.cycle == again.cycle);
        CHECK(rep.inside_count == again.inside_count);
    }
}

TEST_CASE("deep nested triangles and a larger instance") {
    for (int levels : {10, 20, 30}) check_report(nested_triangles(levels), cycle_separator(nested_triangles(levels)));
    std::mt19937 rng(7);
    const EmbeddedGraph g = random_instance(900, rng, 300);
    const SeparatorReport rep = cycle_separator(g);
    check_report(g, rep);
    CHECK(rep.size <= 8 * max_face_length(g) * std::sqrt(900.0));
}

TEST_CASE("ring recognition peels rings and leaves a cap") {
    const EmbeddedGraph g = cylinder(8, 6);
    const NestedStructure ns = recognize_nested(g, 6);
    CHECK(ns.rings.size() == 6);
    CHECK(ns.inner_cap.size() == 12);
    for (int i = 0; i < 6; ++i) {
        std::set<VertexId> got(ns.rings[i].verts.begin(), ns.rings[i].verts.end());
        std::set<VertexId> want;
        for (int j = 0; j < 6; ++j) want.insert(i * 6 + j);
        CHECK(got == want);
    }

    // Triangle with a single interior vertex: one ring, cap of one.
    const EmbeddedGraph k4({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, std::make_pair(0, 1));
    const NestedStructure nk = recognize_nested(k4, 3);
    CHECK(nk.rings.size() == 1);
    CHECK(nk.inner_cap == std::vector<VertexId>{3});
}

TEST_CASE("nested separator picks a balanced middle ring") {
    const EmbeddedGraph g = cylinder(8, 6); // 8 nested C6 rings
    const SeparatorReport rep = nested_cycle_separator(g, 6);
    CHECK(rep.size == 6);
    CHECK(rep.max_side() == 24);
    const int lvl = rep.cycle.verts[0] / 6;
    CHECK((lvl == 3 || lvl == 4));
    for (VertexId v : rep.cycle.verts) CHECK(v / 6 == lvl);

    const EmbeddedGraph t6 = nested_triangles(6);
    const SeparatorReport rt = nested_cycle_separator(t6, 3);
    CHECK(rt.cycle == Cycle::of(t6, {6, 7, 8}));
    CHECK(rt.max_side() <= (18 + 1) / 2 + 2 * 3);
}

TEST_CASE("nested separator rejections") {
    try {
        nested_cycle_separator(cylinder(5, 8), 8); // n = 40 = 5h
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooSmall);
    }
    std::vector<std::vector<VertexId>> rot(10);
    for (int v = 0; v < 10; ++v) rot[v] = {(v + 1) % 10, (v + 9) % 10};
    const EmbeddedGraph poly(std::move(rot), std::make_pair(0, 1));
    try {
        recognize_nested(poly, 3); // outer boundary longer than h
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNested);
    }
}

TEST_CASE("nested and generic paths both satisfy the balance contract") {
    const EmbeddedGraph g = cylinder(8, 6);
    const int n = g.num_vertices();
    const SeparatorReport a = nested_cycle_separator(g, 6);
    const SeparatorReport b = cycle_separator(g);
    CHECK(a.max_side() <= (n + 1) / 2 + 2 * 6);
    CHECK(b.max_side() <= (2 * n + 2) / 3);
}
