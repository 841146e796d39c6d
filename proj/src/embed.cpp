#include "cplan/embed.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cplan {

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<VertexId>> rotation,
                             std::optional<std::pair<VertexId, VertexId>> outer)
    : rotation_(std::move(rotation)), outer_dart_(outer) {
    build_darts();
    validate();
    compute_faces();
    if (outer_dart_) {
        auto [u, v] = *outer_dart_;
        if (!find_dart(u, v))
            fail(ErrorCode::BadParams, "outer dart (" + std::to_string(u) + "," +
                                           std::to_string(v) + ") is not a dart of the graph");
    }
}

void EmbeddedGraph::build_darts() {
    const int b = id_bound();
    dart_offset_.assign(b + 1, 0);
    nbr_index_.assign(b, {});
    num_vertices_ = 0;
    for (VertexId v = 0; v < b; ++v) {
        dart_offset_[v + 1] = dart_offset_[v] + static_cast<int>(rotation_[v].size());
        if (!rotation_[v].empty()) ++num_vertices_;
    }
    num_darts_ = dart_offset_[b];
    dart_tail_.resize(num_darts_);
    dart_head_.resize(num_darts_);
    for (VertexId v = 0; v < b; ++v) {
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
            const VertexId w = rotation_[v][i];
            if (w < 0 || w >= b)
                fail(ErrorCode::BadParams, "neighbor id out of range at vertex " + std::to_string(v));
            if (w == v) fail(ErrorCode::DuplicateEdge, "self-loop at vertex " + std::to_string(v));
            if (!nbr_index_[v].emplace(w, i).second)
                fail(ErrorCode::DuplicateEdge, "parallel edge (" + std::to_string(v) + "," +
                                                   std::to_string(w) + ")");
            dart_tail_[dart_offset_[v] + i] = v;
            dart_head_[dart_offset_[v] + i] = w;
        }
    }
    dart_twin_.resize(num_darts_);
    for (DartId d = 0; d < num_darts_; ++d) {
        const VertexId u = dart_tail_[d], v = dart_head_[d];
        auto it = nbr_index_[v].find(u);
        if (it == nbr_index_[v].end())
            fail(ErrorCode::NonSymmetricRotation, "dart (" + std::to_string(u) + "," +
                                                      std::to_string(v) + ") has no twin");
        dart_twin_[d] = dart_offset_[v] + it->second;
    }
}

void EmbeddedGraph::validate() {
    if (num_vertices_ == 0) fail(ErrorCode::Disconnected, "graph has no present vertices");
    // BFS from the first present vertex.
    VertexId start = 0;
    while (rotation_[start].empty()) ++start;
    std::vector<char> seen(id_bound(), 0);
    std::queue<VertexId> q;
    q.push(start);
    seen[start] = 1;
    int reached = 1;
    while (!q.empty()) {
        const VertexId v = q.front();
        q.pop();
        for (VertexId w : rotation_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != num_vertices_) fail(ErrorCode::Disconnected, "graph is not connected");
}

DartId EmbeddedGraph::face_next(DartId d) const {
    const VertexId v = dart_head_[d];
    const int i = nbr_index_[v].at(dart_tail_[d]);
    const int j = (i + 1) % static_cast<int>(rotation_[v].size());
    return dart_offset_[v] + j;
}

void EmbeddedGraph::compute_faces() {
    faces_.faces.clear();
    faces_.face_of_dart.assign(num_darts_, -1);
    faces_.lengths.clear();
    std::vector<char> visited(num_darts_, 0);
    std::vector<std::vector<DartId>> raw;
    for (DartId d0 = 0; d0 < num_darts_; ++d0) {
        if (visited[d0]) continue;
        std::vector<DartId> cyc;
        DartId d = d0;
        do {
            visited[d] = 1;
            cyc.push_back(d);
            d = face_next(d);
        } while (d != d0);
        // Canonical start: lexicographically smallest (tail, head).
        int best = 0;
        for (int i = 1; i < static_cast<int>(cyc.size()); ++i) {
            const auto a = std::make_pair(dart_tail_[cyc[i]], dart_head_[cyc[i]]);
            const auto b = std::make_pair(dart_tail_[cyc[best]], dart_head_[cyc[best]]);
            if (a < b) best = i;
        }
        std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
        raw.push_back(std::move(cyc));
    }
    std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
        return std::make_pair(dart_tail_[a[0]], dart_head_[a[0]]) <
               std::make_pair(dart_tail_[b[0]], dart_head_[b[0]]);
    });
    faces_.faces = std::move(raw);
    for (FaceId f = 0; f < faces_.count(); ++f) {
        faces_.lengths.push_back(static_cast<int>(faces_.faces[f].size()));
        for (DartId d : faces_.faces[f]) faces_.face_of_dart[d] = f;
    }
    const long long euler = static_cast<long long>(num_vertices_) - num_edges() + faces_.count();
    if (euler != 2)
        fail(ErrorCode::NonPlanarEmbedding,
             "Euler check failed: V-E+F = " + std::to_string(euler));
}

bool EmbeddedGraph::has_edge(VertexId u, VertexId v) const {
    return present(u) && nbr_index_[u].count(v) > 0;
}

std::vector<VertexId> EmbeddedGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(num_vertices_);
    for (VertexId v = 0; v < id_bound(); ++v)
        if (!rotation_[v].empty()) out.push_back(v);
    return out;
}

std::optional<DartId> EmbeddedGraph::find_dart(VertexId u, VertexId v) const {
    if (u < 0 || u >= id_bound()) return std::nullopt;
    auto it = nbr_index_[u].find(v);
    if (it == nbr_index_[u].end()) return std::nullopt;
    return dart_offset_[u] + it->second;
}

DartId EmbeddedGraph::dart(VertexId u, VertexId v) const {
    auto d = find_dart(u, v);
    if (!d)
        fail(ErrorCode::BadParams,
             "no dart (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return *d;
}

std::optional<FaceId> EmbeddedGraph::outer_face() const {
    if (!outer_dart_) return std::nullopt;
    return faces_.face_of_dart[dart(outer_dart_->first, outer_dart_->second)];
}

std::vector<VertexId> EmbeddedGraph::face_walk(FaceId f) const {
    std::vector<VertexId> walk;
    walk.reserve(faces_.faces[f].size());
    for (DartId d : faces_.faces[f]) walk.push_back(dart_tail_[d]);
    return walk;
}

EmbeddedGraph EmbeddedGraph::with_outer(std::optional<std::pair<VertexId, VertexId>> outer) const {
    return EmbeddedGraph(rotation_, outer);
}

bool EmbeddedGraph::operator==(const EmbeddedGraph& other) const {
    const int b = std::max(id_bound(), other.id_bound());
    for (VertexId v = 0; v < b; ++v) {
        const bool pa = present(v), pb = other.present(v);
        if (pa != pb) return false;
        if (!pa) continue;
        const auto& ra = rotation_[v];
        const auto& rb = other.rotation_[v];
        if (ra.size() != rb.size()) return false;
        // Cyclic equality.
        auto it = std::find(rb.begin(), rb.end(), ra[0]);
        if (it == rb.end()) return false;
        const int off = static_cast<int>(it - rb.begin());
        const int n = static_cast<int>(ra.size());
        for (int i = 0; i < n; ++i)
            if (ra[i] != rb[(off + i) % n]) return false;
    }
    return true;
}

Cycle Cycle::of(const EmbeddedGraph& g, std::vector<VertexId> vs) {
    if (vs.size() < 3) fail(ErrorCode::NotACycle, "cycle needs at least 3 vertices");
    std::set<VertexId> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size()) fail(ErrorCode::NotACycle, "repeated vertex in cycle");
    for (size_t i = 0; i < vs.size(); ++i) {
        const VertexId u = vs[i], v = vs[(i + 1) % vs.size()];
        if (!g.has_edge(u, v))
            fail(ErrorCode::NotACycle,
                 "missing cycle edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return Cycle{std::move(vs)};
}

bool Cycle::contains(VertexId v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

Cycle Cycle::canonical() const {
    const int n = size();
    auto rotated = [&](const std::vector<VertexId>& vs, int start) {
        std::vector<VertexId> out(n);
        for (int i = 0; i < n; ++i) out[i] = vs[(start + i) % n];
        return out;
    };
    std::vector<VertexId> rev(verts.rbegin(), verts.rend());
    const int s1 = static_cast<int>(std::min_element(verts.begin(), verts.end()) - verts.begin());
    const int s2 = static_cast<int>(std::min_element(rev.begin(), rev.end()) - rev.begin());
    auto a = rotated(verts, s1);
    auto b = rotated(rev, s2);
    return Cycle{std::min(a, b)};
}

SideMap classify_sides(const EmbeddedGraph& g, const Cycle& rho) {
    const auto outer = g.outer_face();
    if (!outer) fail(ErrorCode::BadParams, "side classification needs a designated outer face");
    // Darts lying on rho (both orientations).
    std::vector<char> rho_dart(g.num_darts(), 0);
    for (int i = 0; i < rho.size(); ++i) {
        const VertexId u = rho.verts[i], v = rho.verts[(i + 1) % rho.size()];
        rho_dart[g.dart(u, v)] = 1;
        rho_dart[g.dart(v, u)] = 1;
    }
    // Dual BFS from the outer face, never crossing a rho edge.
    const FaceSet& fs = g.faces();
    std::vector<char> outside_face(fs.count(), 0);
    std::queue<FaceId> q;
    q.push(*outer);
    outside_face[*outer] = 1;
    while (!q.empty()) {
        const FaceId f = q.front();
        q.pop();
        for (DartId d : fs.faces[f]) {
            if (rho_dart[d]) continue;
            const FaceId across = fs.face_of_dart[g.twin(d)];
            if (!outside_face[across]) {
                outside_face[across] = 1;
                q.push(across);
            }
        }
    }
    SideMap sm;
    sm.face_side.assign(fs.count(), Side::Inside);
    for (FaceId f = 0; f < fs.count(); ++f)
        if (outside_face[f]) sm.face_side[f] = Side::Outside;
    sm.vertex_side.assign(g.id_bound(), Side::Outside);
    std::vector<char> on(g.id_bound(), 0);
    for (VertexId v : rho.verts) on[v] = 1;
    for (VertexId v : g.vertices()) {
        if (on[v]) {
            sm.vertex_side[v] = Side::On;
            continue;
        }
        const DartId d = g.dart(v, g.rotation(v)[0]);
        sm.vertex_side[v] = sm.face_side[fs.face_of_dart[d]];
        if (sm.vertex_side[v] == Side::Inside)
            ++sm.inside_vertices;
        else
            ++sm.outside_vertices;
    }
    return sm;
}

namespace {

// Returns the face of g whose dart set is exactly rho in one orientation,
// together with that orientation's in-neighbor at each rho vertex.
// in_nbr[i] is the tail of the face dart entering rho.verts[i].
struct RhoFace {
    FaceId face;
    std::vector<VertexId> in_nbr; // indexed like rho.verts
};

std::vector<RhoFace> rho_bounded_faces(const EmbeddedGraph& g, const Cycle& rho) {
    std::vector<RhoFace> out;
    const FaceSet& fs = g.faces();
    const int s = rho.size();
    std::vector<int> pos(g.id_bound(), -1);
    for (int i = 0; i < s; ++i) pos[rho.verts[i]] = i;
    for (FaceId f = 0; f < fs.count(); ++f) {
        if (fs.lengths[f] != s) continue;
        bool ok = true;
        for (DartId d : fs.faces[f])
            if (pos[g.tail(d)] < 0 || pos[g.head(d)] < 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        RhoFace rf;
        rf.face = f;
        rf.in_nbr.assign(s, -1);
        for (DartId d : fs.faces[f]) rf.in_nbr[pos[g.head(d)]] = g.tail(d);
        // A face over rho vertices of length s with every vertex entered once
        // is exactly one orientation of rho.
        if (std::find(rf.in_nbr.begin(), rf.in_nbr.end(), -1) == rf.in_nbr.end())
            out.push_back(std::move(rf));
    }
    return out;
}

} // namespace

EmbeddedGraph merge_along_cycle(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                                const Cycle& rho) {
    Cycle::of(g1, rho.verts);
    Cycle::of(g2, rho.verts);
    const int s = rho.size();

    // rho must bound the outer face of g1.
    const auto outer1 = g1.outer_face();
    if (!outer1) fail(ErrorCode::CycleMismatch, "g1 has no designated outer face");
    auto rho_faces1 = rho_bounded_faces(g1, rho);
    const RhoFace* rf1 = nullptr;
    for (const auto& rf : rho_faces1)
        if (rf.face == *outer1) rf1 = &rf;
    if (!rf1) fail(ErrorCode::CycleMismatch, "rho does not bound the outer face of g1");

    // rho must bound an inner face of g2.
    auto rho_faces2 = rho_bounded_faces(g2, rho);
    const auto outer2 = g2.outer_face();
    const RhoFace* rf2 = nullptr;
    for (const auto& rf : rho_faces2)
        if (!outer2 || rf.face != *outer2) {
            rf2 = &rf;
            break;
        }
    if (!rf2) fail(ErrorCode::CycleMismatch, "rho does not bound an inner face of g2");

    std::vector<char> on_rho(std::max(g1.id_bound(), g2.id_bound()), 0);
    for (VertexId v : rho.verts) on_rho[v] = 1;
    const int b = std::max(g1.id_bound(), g2.id_bound());
    for (VertexId v = 0; v < b; ++v)
        if (g1.present(v) && g2.present(v) && !on_rho[v])
            fail(ErrorCode::VertexClash, "vertex " + std::to_string(v) +
                                             " present in both graphs but not on rho");

    std::vector<std::vector<VertexId>> rot(b);
    for (VertexId v = 0; v < b; ++v) {
        if (on_rho[v]) continue;
        if (g1.present(v))
            rot[v] = g1.rotation(v);
        else if (g2.present(v))
            rot[v] = g2.rotation(v);
    }
    std::vector<int> pos(b, -1);
    for (int i = 0; i < s; ++i) pos[rho.verts[i]] = i;
    for (int i = 0; i < s; ++i) {
        const VertexId v = rho.verts[i];
        const VertexId p1 = rf1->in_nbr[i];
        const VertexId p2 = rf2->in_nbr[i];
        const auto& r1 = g1.rotation(v);
        const auto& r2 = g2.rotation(v);
        const int i1 = static_cast<int>(std::find(r1.begin(), r1.end(), p1) - r1.begin());
        const VertexId q1 = r1[(i1 + 1) % r1.size()];
        const int i2 = static_cast<int>(std::find(r2.begin(), r2.end(), p2) - r2.begin());
        const VertexId q2 = r2[(i2 + 1) % r2.size()];
        if (p1 != q2 || q1 != p2)
            fail(ErrorCode::CycleMismatch,
                 "incompatible face orientations along rho at vertex " + std::to_string(v));
        // g1's rotation linearized to end at p1, then g2's arc strictly
        // between q2 and p2.
        std::vector<VertexId> merged;
        const int n1 = static_cast<int>(r1.size());
        for (int k = 1; k <= n1; ++k) merged.push_back(r1[(i1 + k) % n1]);
        const int n2 = static_cast<int>(r2.size());
        for (int k = 2; k < n2; ++k) merged.push_back(r2[(i2 + k) % n2]);
        rot[v] = std::move(merged);
    }

    std::optional<std::pair<VertexId, VertexId>> outer = g2.outer_dart();
    return EmbeddedGraph(std::move(rot), outer);
}

EmbeddedGraph subgraph_side(const EmbeddedGraph& g, const Cycle& rho, SideSel side) {
    Cycle::of(g, rho.verts);
    const SideMap sm = classify_sides(g, rho);
    const Side keep = side == SideSel::Inner ? Side::Inside : Side::Outside;
    std::vector<char> on(g.id_bound(), 0);
    for (VertexId v : rho.verts) on[v] = 1;
    auto is_rho_edge = [&](VertexId u, VertexId v) {
        if (!on[u] || !on[v]) return false;
        for (int i = 0; i < rho.size(); ++i) {
            const VertexId a = rho.verts[i], b = rho.verts[(i + 1) % rho.size()];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    };
    std::vector<std::vector<VertexId>> rot(g.id_bound());
    for (VertexId v : g.vertices()) {
        if (sm.vertex_side[v] == keep) {
            rot[v] = g.rotation(v);
        } else if (sm.vertex_side[v] == Side::On) {
            for (VertexId w : g.rotation(v)) {
                if (sm.vertex_side[w] == keep) {
                    rot[v].push_back(w);
                } else if (sm.vertex_side[w] == Side::On) {
                    if (is_rho_edge(v, w)) {
                        rot[v].push_back(w);
                    } else {
                        // Chord between rho vertices: keep iff it is drawn on
                        // the kept side.
                        const FaceId f = g.faces().face_of_dart[g.dart(v, w)];
                        if (sm.face_side[f] == keep) rot[v].push_back(w);
                    }
                }
            }
        }
    }
    std::optional<std::pair<VertexId, VertexId>> outer;
    if (side == SideSel::Outer) {
        outer = g.outer_dart();
    } else {
        // The emptied outer side becomes the new outer face; pick the rho
        // orientation whose original face was outside.
        const VertexId a = rho.verts[0], b = rho.verts[1];
        const FaceId fab = g.faces().face_of_dart[g.dart(a, b)];
        outer = sm.face_side[fab] == Side::Outside ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    return EmbeddedGraph(std::move(rot), outer);
}

EmbeddedGraph insert_chords_into_face(const EmbeddedGraph& g, FaceId f,
                                      const std::vector<std::pair<int, int>>& position_pairs) {
    const auto& cyc = g.faces().faces[f];
    const int L = static_cast<int>(cyc.size());
    const auto walk = g.face_walk(f);
    // Per corner: list of (cyclic distance to partner, partner vertex).
    std::vector<std::vector<std::pair<int, VertexId>>> at_corner(L);
    for (auto [p, q] : position_pairs) {
        if (p < 0 || p >= L || q < 0 || q >= L || p == q)
            fail(ErrorCode::BadParams, "chord positions out of range");
        if (walk[p] == walk[q]) fail(ErrorCode::BadParams, "chord endpoints coincide");
        at_corner[p].emplace_back((q - p + L) % L, walk[q]);
        at_corner[q].emplace_back((p - q + L) % L, walk[p]);
    }
    // Insertion lists keyed by (vertex, neighbor preceding the corner gap).
    // At the corner after dart (t -> u), chords go right after t, farthest
    // partner first.
    std::vector<std::vector<std::vector<VertexId>>> after(g.id_bound());
    for (VertexId v = 0; v < g.id_bound(); ++v) after[v].resize(g.rotation(v).size());
    for (int p = 0; p < L; ++p) {
        if (at_corner[p].empty()) continue;
        std::sort(at_corner[p].begin(), at_corner[p].end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        const DartId in_dart = cyc[(p - 1 + L) % L];
        const VertexId u = g.head(in_dart), t = g.tail(in_dart);
        const auto& r = g.rotation(u);
        const int ti = static_cast<int>(std::find(r.begin(), r.end(), t) - r.begin());
        for (const auto& [dist, partner] : at_corner[p]) after[u][ti].push_back(partner);
    }
    std::vector<std::vector<VertexId>> rot(g.id_bound());
    for (VertexId v = 0; v < g.id_bound(); ++v) {
        const auto& r = g.rotation(v);
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            rot[v].push_back(r[i]);
            for (VertexId w : after[v][i]) rot[v].push_back(w);
        }
    }
    return EmbeddedGraph(std::move(rot), g.outer_dart());
}

bool is_two_connected(const EmbeddedGraph& g) {
    const auto verts = g.vertices();
    if (verts.size() < 3) return false;
    for (VertexId skip : verts) {
        std::vector<char> seen(g.id_bound(), 0);
        seen[skip] = 1;
        VertexId start = -1;
        for (VertexId v : verts)
            if (v != skip) {
                start = v;
                break;
            }
        std::queue<VertexId> q;
        q.push(start);
        seen[start] = 1;
        size_t reached = 1;
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (VertexId w : g.rotation(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != verts.size() - 1) return false;
    }
    return true;
}

} // namespace cplan
