#include "cplan/separator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <queue>
#include <string>

namespace cplan {
namespace {

// Fan planarization with subdivided diagonals. Every face of length > 3
// gets diagonals from its walk start to all non-adjacent walk vertices,
// each carrying a midpoint vertex so no diagonal can duplicate an existing
// edge; resulting faces have length at most 5. Midpoint ids start at
// g.id_bound().
struct Triangulated {
    struct Mid {
        FaceId host; // face of g
        int p, q;    // walk positions of the two endpoints
    };
    EmbeddedGraph t;
    int first_mid;
    std::vector<Mid> mids; // indexed by id - first_mid
};

Triangulated triangulate(const EmbeddedGraph& g) {
    const int base = g.id_bound();
    std::vector<Triangulated::Mid> mids;
    std::vector<std::vector<VertexId>> extra; // rotations of the mids

    // Insertion lists keyed by (vertex, rotation index of the neighbor
    // preceding the corner), mirroring the chord insertion rule: at the
    // corner after dart (t -> u) new neighbors go right after t, farthest
    // walk partner first.
    std::vector<std::vector<std::vector<VertexId>>> after(base);
    for (VertexId v = 0; v < base; ++v) after[v].resize(g.rotation(v).size());

    const FaceSet& fs = g.faces();
    for (FaceId f = 0; f < fs.count(); ++f) {
        const auto& cyc = fs.faces[f];
        const int L = static_cast<int>(cyc.size());
        if (L <= 3) continue;
        const auto walk = g.face_walk(f);
        std::vector<std::vector<std::pair<int, VertexId>>> at_corner(L);
        for (int i = 2; i <= L - 2; ++i) {
            const VertexId m = base + static_cast<VertexId>(mids.size());
            mids.push_back({f, 0, i});
            extra.push_back({walk[0], walk[i]});
            at_corner[0].emplace_back(i, m);
            at_corner[i].emplace_back(L - i, m);
        }
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
    }

    std::vector<std::vector<VertexId>> rot(base + extra.size());
    for (VertexId v = 0; v < base; ++v) {
        const auto& r = g.rotation(v);
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            rot[v].push_back(r[i]);
            for (VertexId w : after[v][i]) rot[v].push_back(w);
        }
    }
    for (size_t i = 0; i < extra.size(); ++i) rot[base + i] = extra[i];
    return {EmbeddedGraph(std::move(rot), g.outer_dart()), base, std::move(mids)};
}

struct BfsTree {
    std::vector<VertexId> parent; // -1 at root and absent ids
    std::vector<int> depth;
};

BfsTree bfs_tree(const EmbeddedGraph& g, VertexId root) {
    BfsTree bt{std::vector<VertexId>(g.id_bound(), -1), std::vector<int>(g.id_bound(), -1)};
    std::queue<VertexId> q;
    q.push(root);
    bt.depth[root] = 0;
    while (!q.empty()) {
        const VertexId v = q.front();
        q.pop();
        for (VertexId w : g.rotation(v))
            if (bt.depth[w] < 0) {
                bt.depth[w] = bt.depth[v] + 1;
                bt.parent[w] = v;
                q.push(w);
            }
    }
    return bt;
}

// Fundamental cycle of the non-tree edge (u, v), as a vertex list.
std::vector<VertexId> fundamental_cycle(const BfsTree& bt, VertexId u, VertexId v) {
    std::vector<VertexId> up, down;
    VertexId a = u, b = v;
    while (bt.depth[a] > bt.depth[b]) up.push_back(a), a = bt.parent[a];
    while (bt.depth[b] > bt.depth[a]) down.push_back(b), b = bt.parent[b];
    while (a != b) {
        up.push_back(a), a = bt.parent[a];
        down.push_back(b), b = bt.parent[b];
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

// Closed walk -> simple cycle: repeated vertices cut away the loop between
// their occurrences. Consecutive survivors stay walk-adjacent, so the stack
// remains a closed walk of the host graph.
std::vector<VertexId> simplify_closed_walk(const std::vector<VertexId>& walk, int id_bound) {
    std::vector<int> at(id_bound, -1);
    std::vector<VertexId> st;
    for (VertexId v : walk) {
        if (at[v] >= 0) {
            while (static_cast<int>(st.size()) > at[v] + 1) {
                at[st.back()] = -1;
                st.pop_back();
            }
        } else {
            at[v] = static_cast<int>(st.size());
            st.push_back(v);
        }
    }
    return st;
}

// Projects a cycle of the triangulation back to g: each midpoint hop is
// replaced by the shorter host-face boundary arc between its neighbors.
std::vector<VertexId> project_cycle(const EmbeddedGraph& g, const Triangulated& tr,
                                    const std::vector<VertexId>& cyc) {
    const int k = static_cast<int>(cyc.size());
    std::vector<VertexId> out;
    for (int i = 0; i < k; ++i) {
        const VertexId v = cyc[i];
        if (v < tr.first_mid) {
            out.push_back(v);
            continue;
        }
        // Midpoints have exactly two neighbors, both original, so the cycle
        // enters from one endpoint of the diagonal and leaves at the other.
        const auto& mid = tr.mids[v - tr.first_mid];
        const auto walk = g.face_walk(mid.host);
        const int L = static_cast<int>(walk.size());
        const VertexId prev = cyc[(i - 1 + k) % k];
        int a = mid.p, b = mid.q;
        if (walk[a] != prev) std::swap(a, b);
        const int fwd = (b - a + L) % L, bwd = L - fwd;
        if (fwd <= bwd)
            for (int s = 1; s < fwd; ++s) out.push_back(walk[(a + s) % L]);
        else
            for (int s = 1; s < bwd; ++s) out.push_back(walk[(a - s + L) % L]);
    }
    return out;
}

struct Candidate {
    VertexId u, v;
    long long imbalance; // estimate from the triangulation
};

} // namespace

SeparatorReport cycle_separator(const EmbeddedGraph& g, int threshold) {
    if (!g.outer_dart()) fail(ErrorCode::BadParams, "cycle_separator needs a designated outer face");
    const int n = g.num_vertices();
    if (n <= threshold) fail(ErrorCode::TooSmall, "graph at or below separator threshold");
    if (!is_two_connected(g)) fail(ErrorCode::NotTwoConnected, "cycle_separator needs 2-connectivity");

    const Triangulated tr = triangulate(g);
    const EmbeddedGraph& t = tr.t;
    const FaceSet& tfs = t.faces();
    const int nt = t.num_vertices();
    const int bound = (2 * n + 2) / 3;

    const auto verts = g.vertices();
    std::vector<VertexId> roots;
    const int want_roots = std::min<int>(8, static_cast<int>(verts.size()));
    for (int i = 0; i < want_roots; ++i)
        roots.push_back(verts[i * verts.size() / want_roots]);

    const SeparatorReport none{};
    SeparatorReport best = none;
    auto consider = [&](const BfsTree& bt, VertexId u, VertexId v) {
        auto walk = project_cycle(g, tr, fundamental_cycle(bt, u, v));
        auto simple = simplify_closed_walk(walk, g.id_bound());
        if (simple.size() < 3) return;
        const Cycle rho = Cycle::of(g, std::move(simple));
        const SideMap sm = classify_sides(g, rho);
        if (std::max(sm.inside_vertices, sm.outside_vertices) > bound) return;
        SeparatorReport rep{rho, sm.inside_vertices, sm.outside_vertices, rho.size()};
        // Among balanced candidates prefer the shortest cycle: downstream
        // search cost is exponential in the separator size, not the balance.
        if (best.size == 0 || std::make_pair(rep.size, rep.max_side()) <
                                  std::make_pair(best.size, best.max_side()))
            best = rep;
    };

    for (int pass = 0; pass < 2 && best.size == 0; ++pass) {
        for (VertexId root : roots) {
            const BfsTree bt = bfs_tree(t, root);

            // Interdigitating dual tree: non-tree edges of the primal
            // breadth-first tree form a spanning tree of the dual, giving
            // every fundamental cycle its interior face set by subtree sums.
            std::vector<std::pair<VertexId, VertexId>> nontree;
            std::vector<std::vector<std::pair<FaceId, int>>> dual(tfs.count());
            for (VertexId u : t.vertices())
                for (VertexId w : t.rotation(u)) {
                    if (u > w || bt.parent[u] == w || bt.parent[w] == u) continue;
                    const int e = static_cast<int>(nontree.size());
                    nontree.emplace_back(u, w);
                    const DartId d = t.dart(u, w);
                    const FaceId f1 = tfs.face_of_dart[d], f2 = tfs.face_of_dart[t.twin(d)];
                    dual[f1].emplace_back(f2, e);
                    dual[f2].emplace_back(f1, e);
                }
            const FaceId fo = *t.outer_face();
            std::vector<int> parent_edge(tfs.count(), -1);
            std::vector<FaceId> order;
            std::vector<char> seen(tfs.count(), 0);
            std::queue<FaceId> q;
            q.push(fo);
            seen[fo] = 1;
            while (!q.empty()) {
                const FaceId f = q.front();
                q.pop();
                order.push_back(f);
                for (auto [f2, e] : dual[f])
                    if (!seen[f2]) {
                        seen[f2] = 1;
                        parent_edge[f2] = e;
                        q.push(f2);
                    }
            }
            std::vector<int> faces_in(tfs.count(), 1);
            std::vector<long long> len_in(tfs.count());
            for (FaceId f = 0; f < tfs.count(); ++f) len_in[f] = tfs.lengths[f];
            std::vector<FaceId> child_face(nontree.size(), -1);
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                const FaceId f = *it;
                if (parent_edge[f] < 0) continue;
                child_face[parent_edge[f]] = f;
                const auto [u, w] = nontree[parent_edge[f]];
                const DartId d = t.dart(u, w);
                const FaceId p = tfs.face_of_dart[d] == f ? tfs.face_of_dart[t.twin(d)]
                                                          : tfs.face_of_dart[d];
                faces_in[p] += faces_in[f];
                len_in[p] += len_in[f];
            }

            std::vector<Candidate> cands;
            for (size_t e = 0; e < nontree.size(); ++e) {
                const auto [u, w] = nontree[e];
                if (child_face[e] < 0) continue;
                VertexId a = u, b = w;
                int hops = 1;
                while (bt.depth[a] > bt.depth[b]) a = bt.parent[a], ++hops;
                while (bt.depth[b] > bt.depth[a]) b = bt.parent[b], ++hops;
                while (a != b) a = bt.parent[a], b = bt.parent[b], hops += 2;
                const long long L = hops;
                const long long e_in = (len_in[child_face[e]] - L) / 2;
                const long long v_in = e_in - faces_in[child_face[e]] + 1;
                const long long v_out = nt - v_in - L;
                cands.push_back({u, w, std::llabs(v_in - v_out)});
            }
            std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
                return a.imbalance != b.imbalance ? a.imbalance < b.imbalance
                                                 : std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
            });
            const size_t cap = pass == 0 ? std::min<size_t>(cands.size(), 30) : cands.size();
            for (size_t i = 0; i < cap; ++i) consider(bt, cands[i].u, cands[i].v);
        }
    }
    if (best.size == 0) fail(ErrorCode::BadParams, "cycle separator search exhausted");
    return best;
}

NestedStructure recognize_nested(const EmbeddedGraph& g, int h) {
    if (h < 3) fail(ErrorCode::BadParams, "nesting bound below 3");
    if (!g.outer_dart()) fail(ErrorCode::BadParams, "recognize_nested needs a designated outer face");
    NestedStructure ns;
    EmbeddedGraph cur = g;
    while (true) {
        const auto verts = cur.vertices();
        if (verts.empty()) break;
        const auto fo = cur.outer_face();
        if (!fo) fail(ErrorCode::NotNested, "lost the outer face during peeling");
        const auto walk = cur.face_walk(*fo);
        const int L = static_cast<int>(walk.size());
        std::vector<VertexId> sorted = walk;
        std::sort(sorted.begin(), sorted.end());
        if (L < 3 || L > h || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorCode::NotNested, "outer boundary is not a ring of size <= h");
        ns.rings.push_back(Cycle::of(cur, walk));

        std::vector<char> removed(cur.id_bound(), 0);
        for (VertexId v : walk) removed[v] = 1;
        if (static_cast<int>(verts.size()) - L <= 2 * h) {
            // Residual interior becomes the cap, connected or not.
            for (VertexId v : verts)
                if (!removed[v]) ns.inner_cap.push_back(v);
            break;
        }
        std::vector<char> touched(cur.id_bound(), 0);
        for (VertexId v : walk)
            for (VertexId w : cur.rotation(v))
                if (!removed[w]) touched[w] = 1;
        std::vector<std::vector<VertexId>> rot(cur.id_bound());
        for (VertexId v : verts) {
            if (removed[v]) continue;
            for (VertexId w : cur.rotation(v))
                if (!removed[w]) rot[v].push_back(w);
            if (rot[v].empty()) fail(ErrorCode::NotNested, "peeling isolated a vertex");
        }
        EmbeddedGraph next = [&] {
            try {
                return EmbeddedGraph(std::move(rot));
            } catch (const Error&) {
                fail(ErrorCode::NotNested, "interior disconnects after peeling a ring");
            }
        }();
        // New outer face: the one seeing the most vertices adjacent to the
        // removed ring.
        const FaceSet& fs = next.faces();
        int best_f = -1, best_cnt = -1;
        for (FaceId f = 0; f < fs.count(); ++f) {
            int cnt = 0;
            for (VertexId v : next.face_walk(f))
                if (touched[v]) ++cnt;
            if (cnt > best_cnt) best_cnt = cnt, best_f = f;
        }
        const DartId d0 = fs.faces[best_f][0];
        cur = next.with_outer(std::make_pair(next.tail(d0), next.head(d0)));
    }
    if (ns.rings.empty()) fail(ErrorCode::NotNested, "no ring found");
    // Edges may only join a ring to itself or to an adjacent layer; the cap
    // counts as the layer after the last ring.
    std::vector<int> layer(g.id_bound(), -1);
    for (size_t i = 0; i < ns.rings.size(); ++i)
        for (VertexId v : ns.rings[i].verts) layer[v] = static_cast<int>(i);
    for (VertexId v : ns.inner_cap) layer[v] = static_cast<int>(ns.rings.size());
    for (VertexId v : g.vertices())
        for (VertexId w : g.rotation(v))
            if (std::abs(layer[v] - layer[w]) > 1)
                fail(ErrorCode::NotNested, "edge skips a nesting layer");
    return ns;
}

SeparatorReport nested_cycle_separator(const EmbeddedGraph& g, int h) {
    const int n = g.num_vertices();
    if (n <= 5 * h) fail(ErrorCode::TooSmall, "nested separator needs n > 5h");
    const NestedStructure ns = recognize_nested(g, h);
    const int bound = (n + 1) / 2 + 2 * h;
    SeparatorReport best{};
    for (const Cycle& ring : ns.rings) {
        const SideMap sm = classify_sides(g, ring);
        SeparatorReport rep{ring, sm.inside_vertices, sm.outside_vertices, ring.size()};
        if (rep.max_side() > bound) continue;
        if (best.size == 0 || std::make_pair(rep.max_side(), rep.size) <
                                  std::make_pair(best.max_side(), best.size))
            best = rep;
    }
    if (best.size == 0) fail(ErrorCode::NotNested, "no ring balances the sides");
    return best;
}

} // namespace cplan
