#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cplan/toolkit.hpp"

namespace cplan {

namespace {

// Concentric rings of `size` vertices joined by spokes; ring 0 carries the
// outer face.
std::vector<std::vector<VertexId>> ring_rotations(int levels, int size) {
    std::vector<std::vector<VertexId>> rot(static_cast<size_t>(levels) * size);
    for (int i = 0; i < levels; ++i)
        for (int j = 0; j < size; ++j) {
            const VertexId v = i * size + j;
            const VertexId nxt = i * size + (j + 1) % size;
            const VertexId prv = i * size + (j + size - 1) % size;
            if (levels == 1)
                rot[v] = {nxt, prv};
            else if (i == 0)
                rot[v] = {nxt, v + size, prv};
            else if (i == levels - 1)
                rot[v] = {nxt, prv, v - size};
            else
                rot[v] = {nxt, v + size, prv, v - size};
        }
    return rot;
}

// Connects a fresh apex to every corner of the face with the given boundary
// walk: the apex rotation is the reversed walk, and at the corner reached by
// (t -> u) the apex slots in right after t in the rotation at u.
void add_apex(std::vector<std::vector<VertexId>>& rot, const std::vector<VertexId>& walk,
              VertexId apex) {
    if (static_cast<VertexId>(rot.size()) <= apex) rot.resize(apex + 1);
    rot[apex].assign(walk.rbegin(), walk.rend());
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i) {
        const VertexId t = walk[(i + len - 1) % len], u = walk[i];
        auto& r = rot[u];
        r.insert(std::next(std::find(r.begin(), r.end(), t)), apex);
    }
}

int cluster_count_of(const std::vector<ClusterId>& cl) {
    return *std::max_element(cl.begin(), cl.end()) + 1;
}

} // namespace

CGraph gen_nested_triangles(int levels, const std::string& clustering) {
    if (levels < 1) fail(ErrorCode::BadParams, "nested triangles need at least one level");
    std::vector<ClusterId> cl(static_cast<size_t>(levels) * 3);
    for (int i = 0; i < levels; ++i)
        for (int j = 0; j < 3; ++j) {
            ClusterId c;
            if (clustering == "single")
                c = 0;
            else if (clustering == "per-level")
                c = i;
            else if (clustering == "alternating")
                c = i % 2;
            else
                fail(ErrorCode::BadParams, "unknown clustering " + clustering);
            cl[i * 3 + j] = c;
        }
    const int k = cluster_count_of(cl);
    return CGraph(EmbeddedGraph(ring_rotations(levels, 3), std::make_pair(0, 1)), std::move(cl),
                  k);
}

CGraph gen_buckytube(int circumference, int length) {
    if (circumference < 3 || length < 1)
        fail(ErrorCode::BadParams, "buckytube needs circumference >= 3 and length >= 1");
    const int n = circumference * length;
    return CGraph(EmbeddedGraph(ring_rotations(length, circumference), std::make_pair(0, 1)),
                  std::vector<ClusterId>(n, 0), 1);
}

CGraph gen_h_nested(int h, int levels, bool cap, unsigned seed) {
    if (h < 3 || levels < 1) fail(ErrorCode::BadParams, "h-nested needs h >= 3 and levels >= 1");
    const int size = 3 + static_cast<int>(seed % static_cast<unsigned>(h - 2));
    auto rot = ring_rotations(levels, size);
    if (cap) {
        // The hub sits in the face bounded by the innermost ring.
        const EmbeddedGraph shell(rot, std::make_pair(0, 1));
        const VertexId first = (levels - 1) * size;
        FaceId inner = -1;
        for (FaceId f = 0; f < shell.faces().count(); ++f) {
            const auto walk = shell.face_walk(f);
            if (static_cast<int>(walk.size()) == size && f != *shell.outer_face() &&
                *std::min_element(walk.begin(), walk.end()) >= first)
                inner = f;
        }
        if (inner < 0) fail(ErrorCode::BadParams, "no inner ring face found");
        add_apex(rot, shell.face_walk(inner), levels * size);
    }
    const int n = static_cast<int>(rot.size());
    return CGraph(EmbeddedGraph(std::move(rot), std::make_pair(0, 1)),
                  std::vector<ClusterId>(n, 0), 1);
}

CGraph gen_random_planar(int n, int max_face, unsigned seed) {
    if (n < 3 || max_face < 3) fail(ErrorCode::BadParams, "need n >= 3 and max_face >= 3");
    std::mt19937 rng(seed);

    // Grow a maximal planar graph by dropping each new vertex into a random
    // face. Face walks are maintained by hand; both orientations of the
    // starting triangle are faces of its embedding.
    std::vector<std::vector<VertexId>> rot{{1, 2}, {2, 0}, {0, 1}};
    std::vector<std::vector<VertexId>> faces{{0, 1, 2}, {0, 2, 1}};
    {
        const EmbeddedGraph tri(rot);
        faces = {tri.face_walk(0), tri.face_walk(1)};
    }
    for (VertexId v = 3; v < n; ++v) {
        const size_t at = rng() % faces.size();
        const std::vector<VertexId> walk = faces[at];
        add_apex(rot, walk, v);
        faces.erase(faces.begin() + static_cast<long>(at));
        const int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) faces.push_back({walk[i], walk[(i + 1) % len], v});
    }

    // Thin it out: delete edges while every face stays a simple cycle within
    // the length budget, which keeps the graph 2-connected.
    const auto dart_key = [n](VertexId u, VertexId v) {
        return static_cast<long long>(u) * n + v;
    };
    std::map<long long, int> dart_face;
    const auto index_face = [&](int f) {
        const auto& w = faces[f];
        for (size_t i = 0; i < w.size(); ++i) dart_face[dart_key(w[i], w[(i + 1) % w.size()])] = f;
    };
    for (size_t f = 0; f < faces.size(); ++f) index_face(static_cast<int>(f));
    const auto face_of_dart = [&](VertexId u, VertexId v) -> int {
        const auto it = dart_face.find(dart_key(u, v));
        return it == dart_face.end() ? -1 : it->second;
    };
    const int attempts = 4 * n;
    for (int t = 0; t < attempts; ++t) {
        const VertexId u = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        if (rot[u].size() < 3) continue;
        const VertexId v = rot[u][rng() % rot[u].size()];
        if (rot[v].size() < 3) continue;
        const int f1 = face_of_dart(u, v), f2 = face_of_dart(v, u);
        if (f1 < 0 || f2 < 0 || f1 == f2) continue;
        const auto &w1 = faces[f1], &w2 = faces[f2];
        if (static_cast<int>(w1.size() + w2.size()) - 2 > max_face) continue;
        std::set<VertexId> shared;
        for (VertexId x : w1)
            if (std::find(w2.begin(), w2.end(), x) != w2.end()) shared.insert(x);
        if (shared != std::set<VertexId>{u, v}) continue;

        // Merged walk: around f1 from v back to u, then around f2 skipping
        // its v, u corner.
        std::vector<VertexId> merged;
        const auto from = [&merged](const std::vector<VertexId>& w, VertexId start, size_t count) {
            const size_t at =
                static_cast<size_t>(std::find(w.begin(), w.end(), start) - w.begin());
            for (size_t i = 0; i < count; ++i) merged.push_back(w[(at + i) % w.size()]);
        };
        from(w1, v, w1.size());
        const size_t up = static_cast<size_t>(std::find(w2.begin(), w2.end(), u) - w2.begin());
        for (size_t i = 1; i + 1 < w2.size(); ++i) merged.push_back(w2[(up + i) % w2.size()]);

        rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
        rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
        dart_face.erase(dart_key(u, v));
        dart_face.erase(dart_key(v, u));
        faces[f1] = std::move(merged);
        const int last = static_cast<int>(faces.size()) - 1;
        if (f2 != last) {
            faces[f2] = std::move(faces[last]);
            index_face(f2);
        }
        faces.pop_back();
        index_face(f1 == last ? f2 : f1);
    }

    // Put the longest face outside; ties go to the lower walk start.
    const auto& outer = *std::max_element(
        faces.begin(), faces.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    EmbeddedGraph g(std::move(rot), std::make_pair(outer[0], outer[1]));

    const int k = std::min(n, 2 + static_cast<int>(rng() % 3));
    std::vector<ClusterId> cl(n);
    for (VertexId v = 0; v < n; ++v) cl[v] = static_cast<ClusterId>(rng() % k);
    for (int c = 0; c < k; ++c) cl[c] = c;
    return CGraph(std::move(g), std::move(cl), k);
}

CGraph gen_cluster_separator(const std::string& kind) {
    if (kind == "basic") {
        // Triangle cluster with one foreign apex inside and one outside.
        std::vector<std::vector<VertexId>> rot{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
        const EmbeddedGraph core(rot);
        FaceId tri = -1;
        for (FaceId f = 0; f < core.faces().count(); ++f)
            if (core.face_walk(f) == std::vector<VertexId>{0, 1, 2}) tri = f;
        add_apex(rot, core.face_walk(tri), 4);
        return CGraph(EmbeddedGraph(std::move(rot), std::make_pair(4, 0)), {0, 0, 0, 1, 1}, 2);
    }
    const int levels = kind == "ring" ? 5 : kind == "deep" ? 9 : 0;
    if (levels == 0) fail(ErrorCode::BadParams, "unknown cluster-separator kind " + kind);
    std::vector<ClusterId> cl(static_cast<size_t>(levels) * 3, 1);
    for (int j = 0; j < 3; ++j) cl[j] = cl[(levels - 1) * 3 + j] = 0;
    return CGraph(EmbeddedGraph(ring_rotations(levels, 3), std::make_pair(0, 1)), std::move(cl),
                  2);
}

} // namespace cplan
