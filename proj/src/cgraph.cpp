#include "cplan/cgraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace cplan {

CGraph::CGraph(EmbeddedGraph g, std::vector<ClusterId> clusters, int k)
    : graph(std::move(g)), cluster_of(std::move(clusters)), cluster_count(k) {
    if (static_cast<int>(cluster_of.size()) < graph.id_bound())
        fail(ErrorCode::BadParams, "cluster assignment shorter than vertex id space");
    if (k <= 0) fail(ErrorCode::BadParams, "cluster count must be positive");
    for (VertexId v : graph.vertices())
        if (cluster_of[v] < 0 || cluster_of[v] >= k)
            fail(ErrorCode::BadParams,
                 "vertex " + std::to_string(v) + " has cluster id out of range");
}

std::vector<VertexId> CGraph::cluster_vertices(ClusterId mu) const {
    std::vector<VertexId> out;
    for (VertexId v : graph.vertices())
        if (cluster_of[v] == mu) out.push_back(v);
    return out;
}

int ClusterComponents::disconnected_cluster_count() const {
    int c = 0;
    for (const auto& comps : components)
        if (comps.size() > 1) ++c;
    return c;
}

ClusterComponents cluster_components(const CGraph& cg) {
    const EmbeddedGraph& g = cg.graph;
    ClusterComponents cc;
    cc.components.resize(cg.cluster_count);
    cc.component_of.assign(g.id_bound(), -1);
    for (VertexId s : g.vertices()) {
        if (cc.component_of[s] >= 0) continue;
        const ClusterId mu = cg.cluster_of[s];
        const int id = static_cast<int>(cc.components[mu].size());
        // BFS within the induced subgraph G(mu).
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        cc.component_of[s] = id;
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (VertexId w : g.rotation(v)) {
                if (cg.cluster_of[w] != mu || cc.component_of[w] >= 0) continue;
                cc.component_of[w] = id;
                q.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        cc.components[mu].push_back(std::move(comp));
    }
    return cc;
}

namespace {

// Dual regions of the plane cut along the monochromatic edges of cluster mu.
// Faces of g are merged whenever they share a dart whose endpoints are not
// both in mu. A vertex outside mu lies on no cut edge, so all faces around
// it fall in one region.
std::vector<int> mu_regions(const CGraph& cg, ClusterId mu) {
    const EmbeddedGraph& g = cg.graph;
    const FaceSet& fs = g.faces();
    std::vector<int> region(fs.count(), -1);
    int next = 0;
    for (FaceId s = 0; s < fs.count(); ++s) {
        if (region[s] >= 0) continue;
        region[s] = next;
        std::queue<FaceId> q;
        q.push(s);
        while (!q.empty()) {
            const FaceId f = q.front();
            q.pop();
            for (DartId d : fs.faces[f]) {
                if (cg.cluster_of[g.tail(d)] == mu && cg.cluster_of[g.head(d)] == mu) continue;
                const FaceId across = fs.face_of_dart[g.twin(d)];
                if (region[across] < 0) {
                    region[across] = region[f];
                    q.push(across);
                }
            }
        }
        ++next;
    }
    return region;
}

} // namespace

ConditionIIOutcome check_condition_ii(const CGraph& cg) {
    const EmbeddedGraph& g = cg.graph;
    const FaceSet& fs = g.faces();

    // region[mu][f]: which mu-region face f belongs to. A vertex x not in mu
    // is enclosed by a cycle of G(mu) exactly when its faces sit in a
    // different region than the outer face (a minimal dual cut between the
    // regions is a simple monochromatic cycle around x).
    std::vector<std::vector<int>> region(cg.cluster_count);
    for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) region[mu] = mu_regions(cg, mu);

    // Any face incident to x represents x's region.
    std::vector<FaceId> face_at(g.id_bound(), -1);
    for (VertexId v : g.vertices())
        face_at[v] = fs.face_of_dart[g.dart(v, g.rotation(v)[0])];

    auto first_violation = [&](FaceId outer) -> std::optional<ConditionIIOutcome::Violation> {
        for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) {
            for (VertexId x : g.vertices()) {
                if (cg.cluster_of[x] == mu) continue;
                if (region[mu][face_at[x]] != region[mu][outer])
                    return ConditionIIOutcome::Violation{mu, face_at[x], x};
            }
        }
        return std::nullopt;
    };

    ConditionIIOutcome out;
    std::vector<FaceId> tried;
    if (auto of = g.outer_face())
        tried.push_back(*of);
    else
        for (FaceId f = 0; f < fs.count(); ++f) tried.push_back(f);

    std::optional<ConditionIIOutcome::Violation> first;
    for (FaceId f : tried) {
        auto v = first_violation(f);
        if (!v)
            out.admissible_outer_faces.push_back(f);
        else if (!first)
            first = v;
    }
    out.ok = !out.admissible_outer_faces.empty();
    if (!out.ok) out.violation = first;
    return out;
}

bool is_cluster_separator(const CGraph& cg, const Cycle& rho) {
    const SideMap sm = classify_sides(cg.graph, rho);
    std::vector<char> has_in(cg.cluster_count, 0), has_out(cg.cluster_count, 0),
        has_on(cg.cluster_count, 0);
    for (VertexId v : cg.graph.vertices()) {
        const ClusterId mu = cg.cluster_of[v];
        switch (sm.vertex_side[v]) {
        case Side::On: has_on[mu] = 1; break;
        case Side::Inside: has_in[mu] = 1; break;
        case Side::Outside: has_out[mu] = 1; break;
        }
    }
    for (ClusterId mu = 0; mu < cg.cluster_count; ++mu)
        if (has_in[mu] && has_out[mu] && !has_on[mu]) return true;
    return false;
}

} // namespace cplan
