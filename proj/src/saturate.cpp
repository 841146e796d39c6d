#include "cplan/saturate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace cplan {

std::vector<std::vector<CandidateEdge>> SaturationSet::by_face(int face_count) const {
    std::vector<std::vector<CandidateEdge>> out(face_count);
    for (const auto& c : chosen) out[c.face].push_back(c);
    return out;
}

std::vector<CandidateEdge> candidate_saturating_edges(const CGraph& cg) {
    const EmbeddedGraph& g = cg.graph;
    const FaceSet& fs = g.faces();
    const ClusterComponents cc = cluster_components(cg);
    std::vector<CandidateEdge> out;

    for (FaceId f = 0; f < fs.count(); ++f) {
        const auto walk = g.face_walk(f);
        const int len = static_cast<int>(walk.size());

        // Union boundary occurrences joined by same-cluster boundary edges;
        // the walk is cyclic, and repeated vertices merge their occurrences.
        std::vector<int> run(len);
        std::iota(run.begin(), run.end(), 0);
        auto find = [&](int i) {
            while (run[i] != i) i = run[i] = run[run[i]];
            return i;
        };
        auto unite = [&](int a, int b) { run[find(a)] = find(b); };
        std::map<VertexId, int> first_occ;
        for (int i = 0; i < len; ++i) {
            auto [it, fresh] = first_occ.try_emplace(walk[i], i);
            if (!fresh) unite(i, it->second);
        }
        for (int i = 0; i < len; ++i) {
            const int j = (i + 1) % len;
            if (cg.cluster_of[walk[i]] == cg.cluster_of[walk[j]]) unite(i, j);
        }

        // Reference occurrence of each run: the earliest position.
        std::map<int, int> run_ref; // run root -> position
        for (int i = 0; i < len; ++i) {
            const int r = find(i);
            auto [it, fresh] = run_ref.try_emplace(r, i);
            if (!fresh && i < it->second) it->second = i;
        }
        std::vector<int> refs;
        for (auto [r, pos] : run_ref) refs.push_back(pos);
        std::sort(refs.begin(), refs.end());

        for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) {
            for (size_t a = 0; a < refs.size(); ++a) {
                if (cg.cluster_of[walk[refs[a]]] != mu) continue;
                for (size_t b = a + 1; b < refs.size(); ++b) {
                    if (cg.cluster_of[walk[refs[b]]] != mu) continue;
                    const VertexId u = walk[refs[a]], v = walk[refs[b]];
                    if (cc.component_of[u] == cc.component_of[v]) continue;
                    out.push_back({f, u, v, mu, refs[a], refs[b]});
                }
            }
        }
    }
    return out;
}

namespace {

bool crossing(const CandidateEdge& x, const CandidateEdge& y) {
    const auto inside = [](int p, int a, int b) { return a < p && p < b; };
    return inside(y.pos_u, x.pos_u, x.pos_v) != inside(y.pos_v, x.pos_u, x.pos_v) &&
           y.pos_u != x.pos_u && y.pos_u != x.pos_v && y.pos_v != x.pos_u && y.pos_v != x.pos_v;
}

std::pair<VertexId, VertexId> key(VertexId u, VertexId v) {
    return {std::min(u, v), std::max(u, v)};
}

} // namespace

bool is_valid_saturation(const CGraph& cg, const SaturationSet& s) {
    const auto candidates = candidate_saturating_edges(cg);
    for (const auto& c : s.chosen) {
        const bool known = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const CandidateEdge& x) { return x.same_chord(c); });
        if (!known)
            fail(ErrorCode::ForeignEdge, "chord (" + std::to_string(c.u) + "," +
                                             std::to_string(c.v) + ") in face " +
                                             std::to_string(c.face) + " is not a candidate");
    }

    // Distinct chosen chords must be distinct abstract edges, or the
    // augmented graph would carry a parallel edge.
    for (size_t i = 0; i < s.chosen.size(); ++i)
        for (size_t j = i + 1; j < s.chosen.size(); ++j) {
            const auto &a = s.chosen[i], &b = s.chosen[j];
            if (key(a.u, a.v) == key(b.u, b.v)) return false;
            if (a.face == b.face && crossing(a, b)) return false;
        }

    // Cluster connectivity over G(mu) plus chosen mu-chords.
    const ClusterComponents cc = cluster_components(cg);
    std::vector<int> comp(cg.graph.id_bound(), -1);
    for (VertexId v : cg.graph.vertices())
        comp[v] = cg.cluster_of[v] * cg.graph.id_bound() + cc.component_of[v];
    // Union components by chosen chords.
    std::map<int, int> parent;
    std::function<int(int)> root = [&](int x) {
        auto it = parent.try_emplace(x, x).first;
        if (it->second != x) it->second = root(it->second);
        return it->second;
    };
    for (const auto& c : s.chosen) parent[root(comp[c.u])] = root(comp[c.v]);
    for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) {
        const auto& comps = cc.components[mu];
        if (comps.size() <= 1) continue;
        const int r0 = root(mu * cg.graph.id_bound() + 0);
        for (size_t i = 1; i < comps.size(); ++i)
            if (root(mu * cg.graph.id_bound() + static_cast<int>(i)) != r0) return false;
    }
    return true;
}

DiamondGraph build_diamond(const CGraph& cg) {
    DiamondGraph d;
    d.id_bound = cg.graph.id_bound();
    d.cluster_of = cg.cluster_of;
    d.cluster_count = cg.cluster_count;
    for (VertexId u : cg.graph.vertices())
        for (VertexId v : cg.graph.rotation(u))
            if (u < v) d.base_edges.emplace_back(u, v);
    std::sort(d.base_edges.begin(), d.base_edges.end());

    std::map<std::pair<VertexId, VertexId>, DiamondGraph::StarEdge> merged;
    for (const auto& c : candidate_saturating_edges(cg)) {
        const auto k = key(c.u, c.v);
        auto [it, fresh] = merged.try_emplace(k, DiamondGraph::StarEdge{k.first, k.second, c.cluster, {}});
        it->second.faces.push_back(c.face);
    }
    for (auto& [k, e] : merged) {
        std::sort(e.faces.begin(), e.faces.end());
        e.faces.erase(std::unique(e.faces.begin(), e.faces.end()), e.faces.end());
        d.star_edges.push_back(std::move(e));
    }
    return d;
}

} // namespace cplan
