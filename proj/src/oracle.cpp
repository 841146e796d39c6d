#include "cplan/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace cplan {

const char* to_string(Decision::Reason r) {
    switch (r) {
    case Decision::Reason::ClusterSeparator: return "cluster-separator";
    case Decision::Reason::ExhaustedCandidates: return "exhausted candidates";
    case Decision::Reason::ConditionII: return "condition-ii violation";
    }
    return "unknown";
}

namespace {

bool chords_cross(const CandidateEdge& x, const CandidateEdge& y) {
    const int a = std::min(x.pos_u, x.pos_v), b = std::max(x.pos_u, x.pos_v);
    const int c = std::min(y.pos_u, y.pos_v), d = std::max(y.pos_u, y.pos_v);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// All noncrossing subsets of one face's chords, empty set first, then by
// inclusion pattern (exclude branch explored before include).
void noncrossing_subsets(const std::vector<CandidateEdge>& chords, size_t at,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (at == chords.size()) {
        out.push_back(cur);
        return;
    }
    noncrossing_subsets(chords, at + 1, cur, out);
    for (int i : cur)
        if (chords_cross(chords[i], chords[at])) return;
    cur.push_back(static_cast<int>(at));
    noncrossing_subsets(chords, at + 1, cur, out);
    cur.pop_back();
}

// Connectivity of every cluster in g plus the extra edges, by plain BFS.
bool clusters_connected(const CGraph& cg,
                        const std::vector<std::pair<VertexId, VertexId>>& extra) {
    const EmbeddedGraph& g = cg.graph;
    std::vector<std::vector<VertexId>> adj(g.id_bound());
    for (VertexId v : g.vertices())
        for (VertexId w : g.rotation(v)) adj[v].push_back(w);
    for (auto [u, v] : extra) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(g.id_bound(), 0);
    for (VertexId s : g.vertices()) {
        if (seen[s]) continue;
        const ClusterId mu = cg.cluster_of[s];
        // s is the first unseen vertex of mu: flood within mu, then demand
        // that no later mu-vertex is left unseen.
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (VertexId w : adj[v])
                if (!seen[w] && cg.cluster_of[w] == mu) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        for (VertexId v : g.vertices())
            if (cg.cluster_of[v] == mu && !seen[v]) return false;
    }
    return true;
}

EmbeddedGraph apply_saturation(const EmbeddedGraph& g0, const CGraph& cg,
                               const std::vector<std::vector<CandidateEdge>>& per_face) {
    EmbeddedGraph g = g0;
    for (FaceId f = 0; f < static_cast<FaceId>(per_face.size()); ++f) {
        if (per_face[f].empty()) continue;
        const auto walk = cg.graph.face_walk(f);
        FaceId cur = -1;
        for (FaceId h = 0; h < g.faces().count(); ++h)
            if (g.face_walk(h) == walk) cur = h;
        if (cur < 0) fail(ErrorCode::MergeIncompatible, "saturated face walk not found");
        std::vector<std::pair<int, int>> pos;
        for (const auto& c : per_face[f]) pos.emplace_back(c.pos_u, c.pos_v);
        g = insert_chords_into_face(g, cur, pos);
    }
    return g;
}

} // namespace

Decision brute_force_cplanar(const CGraph& cg, int candidate_cap) {
    const auto candidates = candidate_saturating_edges(cg);
    if (static_cast<int>(candidates.size()) > candidate_cap)
        fail(ErrorCode::TooLarge, "candidate count " + std::to_string(candidates.size()) +
                                      " exceeds oracle cap " + std::to_string(candidate_cap));

    const int fcount = cg.graph.faces().count();
    std::vector<std::vector<CandidateEdge>> per_face(fcount);
    for (const auto& c : candidates) per_face[c.face].push_back(c);

    std::vector<std::vector<std::vector<int>>> options(fcount);
    for (FaceId f = 0; f < fcount; ++f) {
        std::vector<int> cur;
        noncrossing_subsets(per_face[f], 0, cur, options[f]);
    }

    std::vector<size_t> pick(fcount, 0);
    for (;;) {
        std::vector<std::pair<VertexId, VertexId>> extra;
        std::vector<std::vector<CandidateEdge>> chosen(fcount);
        bool duplicate = false;
        std::map<std::pair<VertexId, VertexId>, int> seen_edge;
        for (FaceId f = 0; f < fcount && !duplicate; ++f)
            for (int i : options[f][pick[f]]) {
                const auto& c = per_face[f][i];
                const auto k = std::minmax(c.u, c.v);
                if (++seen_edge[{k.first, k.second}] > 1) {
                    duplicate = true;
                    break;
                }
                extra.emplace_back(c.u, c.v);
                chosen[f].push_back(c);
            }

        if (!duplicate && clusters_connected(cg, extra)) {
            Witness w{CGraph(apply_saturation(cg.graph, cg, chosen), cg.cluster_of,
                             cg.cluster_count),
                      {}, std::nullopt, nullptr};
            for (FaceId f = 0; f < fcount; ++f)
                for (const auto& c : chosen[f]) w.added.chosen.push_back(c);
            return Decision::accept(std::move(w));
        }

        // Odometer over the per-face option lists.
        int f = 0;
        while (f < fcount && ++pick[f] == options[f].size()) pick[f++] = 0;
        if (f == fcount) break;
    }
    return Decision::reject(Decision::Reason::ExhaustedCandidates);
}

WitnessReport verify_witness(const CGraph& cg, const Witness& w) {
    WitnessReport rep;
    auto flag = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    const CGraph& base = w.basis_or(cg);
    const EmbeddedGraph& sg = w.super_graph.graph;

    // (e) embedded validity: reconstruct from raw rotations.
    try {
        std::vector<std::vector<VertexId>> rot(sg.id_bound());
        for (VertexId v : sg.vertices()) rot[v] = sg.rotation(v);
        EmbeddedGraph check(rot, sg.outer_dart());
    } catch (const Error& e) {
        flag(std::string("super graph is not a valid embedding: ") + e.what());
        return rep;
    }

    // (b) added chords are candidates of the basis instance.
    const auto candidates = candidate_saturating_edges(base);
    for (const auto& c : w.added.chosen) {
        const bool known = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const CandidateEdge& x) { return x.same_chord(c); });
        if (!known)
            flag("added chord (" + std::to_string(c.u) + "," + std::to_string(c.v) +
                 ") in face " + std::to_string(c.face) + " is not a candidate");
        if (!sg.has_edge(c.u, c.v))
            flag("added chord (" + std::to_string(c.u) + "," + std::to_string(c.v) +
                 ") missing from super graph");
    }

    // (c) noncrossing per face, no repeated abstract edge.
    for (size_t i = 0; i < w.added.chosen.size(); ++i)
        for (size_t j = i + 1; j < w.added.chosen.size(); ++j) {
            const auto &a = w.added.chosen[i], &b = w.added.chosen[j];
            if (std::minmax(a.u, a.v) == std::minmax(b.u, b.v))
                flag("chord (" + std::to_string(a.u) + "," + std::to_string(a.v) +
                     ") chosen twice");
            else if (a.face == b.face && chords_cross(a, b))
                flag("crossing chords in face " + std::to_string(a.face));
        }

    // (a) super graph minus added chords equals the basis instance.
    {
        std::vector<std::vector<VertexId>> rot(sg.id_bound());
        for (VertexId v : sg.vertices()) rot[v] = sg.rotation(v);
        bool removable = true;
        for (const auto& c : w.added.chosen) {
            auto strip = [&](VertexId x, VertexId y) {
                auto it = std::find(rot[x].begin(), rot[x].end(), y);
                if (it == rot[x].end()) return false;
                rot[x].erase(it);
                return true;
            };
            if (!strip(c.u, c.v) || !strip(c.v, c.u)) removable = false;
        }
        if (!removable) {
            flag("added chords are not a sub-multiset of the super graph's edges");
        } else {
            try {
                EmbeddedGraph stripped(rot, base.graph.outer_dart());
                if (!(stripped == base.graph))
                    flag("super graph minus added chords differs from the instance");
            } catch (const Error& e) {
                flag(std::string("stripping added chords broke the embedding: ") + e.what());
            }
        }
        if (w.super_graph.cluster_count != base.cluster_count)
            flag("cluster count mismatch");
        else
            for (VertexId v : base.graph.vertices())
                if (w.super_graph.cluster_of[v] != base.cluster_of[v]) {
                    flag("cluster assignment differs at vertex " + std::to_string(v));
                    break;
                }
    }

    // (d) every cluster connected in the super graph.
    if (cluster_components(w.super_graph).disconnected_cluster_count() > 0)
        flag("a cluster is disconnected in the super graph");

    return rep;
}

} // namespace cplan
