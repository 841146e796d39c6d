#include "cplan/gadgets.hpp"

#include <queue>
#include <string>

namespace cplan {

Provenance Provenance::then(const Provenance& later) const {
    Provenance out;
    out.origin.reserve(later.origin.size());
    for (const auto& o : later.origin) {
        if (o.kind == Kind::Original)
            out.origin.push_back(origin[o.vertex]);
        else
            out.origin.push_back(o);
    }
    return out;
}

std::pair<CGraph, Provenance> edge_gadget(const CGraph& cg) {
    const EmbeddedGraph& g = cg.graph;
    const int base = g.id_bound();

    // One gadget per edge (c,x), c < x: ids w, w1, w2 in that order. w1 is
    // the detour beside the face containing the dart c -> x.
    std::vector<int> edge_index(g.num_darts(), -1);
    int m = 0;
    for (VertexId c : g.vertices())
        for (VertexId x : g.rotation(c))
            if (c < x) edge_index[g.dart(c, x)] = m++;
    auto ids = [&](VertexId a, VertexId b) {
        const VertexId c = std::min(a, b), x = std::max(a, b);
        const int w = base + 3 * edge_index[g.dart(c, x)];
        return std::array<VertexId, 3>{w, w + 1, w + 2}; // w, w1, w2
    };

    std::vector<std::vector<VertexId>> rot(base + 3 * m);
    std::vector<ClusterId> cl(base + 3 * m, 0);
    Provenance prov;
    prov.origin.resize(base + 3 * m);

    for (VertexId v : g.vertices()) {
        cl[v] = cg.cluster_of[v];
        prov.origin[v] = {Provenance::Kind::Original, v, -1, -1};
        for (VertexId u : g.rotation(v)) {
            auto [w, w1, w2] = ids(v, u);
            if (v < u)
                rot[v].insert(rot[v].end(), {w1, w, w2});
            else
                rot[v].insert(rot[v].end(), {w2, w, w1});
        }
    }
    for (VertexId c : g.vertices())
        for (VertexId x : g.rotation(c)) {
            if (c > x) continue;
            auto [w, w1, w2] = ids(c, x);
            rot[w] = {c, w1, x, w2};
            rot[w1] = {c, x, w};
            rot[w2] = {x, c, w};
            cl[w] = cl[w1] = cl[w2] = cg.cluster_of[c];
            prov.origin[w] = {Provenance::Kind::Subdivision, -1, c, x};
            prov.origin[w1] = {Provenance::Kind::SidePath, -1, c, x};
            prov.origin[w2] = {Provenance::Kind::SidePath, -1, x, c};
        }

    std::optional<std::pair<VertexId, VertexId>> outer;
    if (auto od = g.outer_dart()) {
        auto [u, v] = *od;
        auto [w, w1, w2] = ids(u, v);
        (void)w;
        outer = std::make_pair(u, u < v ? w1 : w2);
    }
    return {CGraph(EmbeddedGraph(std::move(rot), outer), std::move(cl), cg.cluster_count),
            std::move(prov)};
}

std::pair<CGraph, Provenance> vertex_ring_gadget(const CGraph& cg) {
    const EmbeddedGraph& g = cg.graph;
    for (VertexId v : g.vertices())
        if (g.degree(v) < 3)
            fail(ErrorCode::PreconditionDegree,
                 "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

    // Ring vertex per dart: r(c -> x) subdivides the edge next to c.
    const int base = g.id_bound();
    auto r = [&](DartId d) { return base + d; };

    std::vector<std::vector<VertexId>> rot(base + g.num_darts());
    std::vector<ClusterId> cl(base + g.num_darts(), 0);
    Provenance prov;
    prov.origin.resize(base + g.num_darts());

    for (VertexId c : g.vertices()) {
        cl[c] = cg.cluster_of[c];
        prov.origin[c] = {Provenance::Kind::Original, c, -1, -1};
        const int deg = g.degree(c);
        for (int i = 0; i < deg; ++i) {
            const VertexId x = g.rotation(c)[i];
            const DartId d = g.dart(c, x);
            rot[c].push_back(r(d));
            const DartId next = g.dart(c, g.rotation(c)[(i + 1) % deg]);
            const DartId prev = g.dart(c, g.rotation(c)[(i + deg - 1) % deg]);
            rot[r(d)] = {r(next), c, r(prev), r(g.twin(d))};
            cl[r(d)] = cg.cluster_of[c];
            prov.origin[r(d)] = {Provenance::Kind::Ring, c, c, x};
        }
    }

    std::optional<std::pair<VertexId, VertexId>> outer;
    if (auto od = g.outer_dart()) {
        const DartId d = g.dart(od->first, od->second);
        outer = std::make_pair(r(d), r(g.twin(d)));
    }
    return {CGraph(EmbeddedGraph(std::move(rot), outer), std::move(cl), cg.cluster_count),
            std::move(prov)};
}

std::pair<CGraph, Provenance> make_three_connected(const CGraph& cg) {
    auto [mid, p1] = edge_gadget(cg);
    auto [out, p2] = vertex_ring_gadget(mid);
    return {std::move(out), p1.then(p2)};
}

bool is_three_connected(const EmbeddedGraph& g) {
    const auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n < 4) return false;
    if (!is_two_connected(g)) return false;
    // Separation pairs by exhaustive removal.
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            std::vector<char> blocked(g.id_bound(), 0);
            blocked[verts[i]] = blocked[verts[j]] = 1;
            VertexId start = -1;
            for (VertexId v : verts)
                if (!blocked[v]) {
                    start = v;
                    break;
                }
            std::vector<char> seen(g.id_bound(), 0);
            std::queue<VertexId> q;
            q.push(start);
            seen[start] = 1;
            int reached = 1;
            while (!q.empty()) {
                const VertexId v = q.front();
                q.pop();
                for (VertexId w : g.rotation(v))
                    if (!blocked[w] && !seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        q.push(w);
                    }
            }
            if (reached != n - 2) return false;
        }
    return true;
}

} // namespace cplan
