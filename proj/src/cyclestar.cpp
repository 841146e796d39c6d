#include "cplan/cyclestar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>

namespace cplan {

bool CycleStar::operator==(const CycleStar& o) const {
    if (rho.verts != o.rho.verts || rho_clusters != o.rho_clusters) return false;
    if (stars.size() != o.stars.size()) return false;
    for (size_t i = 0; i < stars.size(); ++i)
        if (stars[i].cluster != o.stars[i].cluster || stars[i].attach != o.stars[i].attach)
            return false;
    return true;
}

void CycleStar::validate() const {
    const int s = rho.size();
    if (static_cast<int>(rho_clusters.size()) != s)
        fail(ErrorCode::BadParams, "rho cluster annotation length mismatch");
    std::vector<int> owner(s, -1);
    for (size_t i = 0; i < stars.size(); ++i) {
        const auto& st = stars[i];
        if (st.attach.size() < 2) fail(ErrorCode::BadParams, "star with fewer than 2 attachments");
        if (!std::is_sorted(st.attach.begin(), st.attach.end()))
            fail(ErrorCode::BadParams, "star attachments not ascending");
        for (int p : st.attach) {
            if (p < 0 || p >= s) fail(ErrorCode::BadParams, "attachment position out of range");
            if (rho_clusters[p] != st.cluster)
                fail(ErrorCode::BadParams, "star attachment in a different cluster");
            if (owner[p] >= 0) fail(ErrorCode::BadParams, "rho vertex attached to two stars");
            owner[p] = static_cast<int>(i);
        }
    }
    // Noncrossing: every other star must fit inside one cyclic gap.
    for (size_t i = 0; i < stars.size(); ++i)
        for (size_t j = i + 1; j < stars.size(); ++j) {
            const auto& a = stars[i].attach;
            auto gap_of = [&](int p) {
                // Index of the cyclic gap (a[g], a[g+1]) holding p.
                for (size_t g = 0; g + 1 < a.size(); ++g)
                    if (a[g] < p && p < a[g + 1]) return static_cast<int>(g);
                return static_cast<int>(a.size()) - 1; // wraparound gap
            };
            const int g0 = gap_of(stars[j].attach[0]);
            for (int p : stars[j].attach)
                if (gap_of(p) != g0) fail(ErrorCode::BadParams, "crossing stars");
        }
}

std::vector<CycleStar> enumerate_cycle_stars(const CGraph& cg, const Cycle& rho) {
    const int s = rho.size();
    std::vector<ClusterId> rc(s);
    for (int i = 0; i < s; ++i) rc[i] = cg.cluster_of[rho.verts[i]];

    // Noncrossing partitions of 0..s-1 with monochromatic blocks of size
    // >= 2, closing blocks before extending so the all-singleton partition
    // streams first.
    std::vector<CycleStar> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(int, int, std::function<void()>)> interval =
        [&](int l, int r, std::function<void()> done) {
            if (l >= r) {
                done();
                return;
            }
            // First block of the interval contains l.
            std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& block) {
                // Close: partition the gaps between consecutive members.
                blocks.push_back(block);
                std::function<void(size_t)> gaps = [&](size_t gi) {
                    if (gi + 1 < block.size())
                        interval(block[gi] + 1, block[gi + 1], [&] { gaps(gi + 1); });
                    else
                        interval(block.back() + 1, r, done);
                };
                gaps(0);
                blocks.pop_back();
                // Extend with a later same-cluster position.
                for (int p = block.back() + 1; p < r; ++p) {
                    if (rc[p] != rc[block[0]]) continue;
                    block.push_back(p);
                    grow(block);
                    block.pop_back();
                }
            };
            std::vector<int> block{l};
            grow(block);
        };

    interval(0, s, [&] {
        CycleStar cs;
        cs.rho = rho;
        cs.rho_clusters = rc;
        cs.cluster_count = cg.cluster_count;
        cs.side = SideSel::Inner;
        for (const auto& b : blocks)
            if (b.size() >= 2) cs.stars.push_back({rc[b[0]], b});
        std::sort(cs.stars.begin(), cs.stars.end(),
                  [](const auto& x, const auto& y) { return x.attach[0] < y.attach[0]; });
        out.push_back(std::move(cs));
    });
    return out;
}

CycleStar contract_to_cycle_star(const CGraph& witness, const Cycle& rho, SideSel side) {
    const EmbeddedGraph& g = witness.graph;
    if (is_cluster_separator(witness, rho))
        fail(ErrorCode::ClusterSeparatorCycle, "rho is a cluster-separator of the witness");
    if (cluster_components(witness).disconnected_cluster_count() > 0)
        fail(ErrorCode::NotCConnected, "witness has a disconnected cluster");

    const SideMap sm = classify_sides(g, rho);
    const Side want = side == SideSel::Inner ? Side::Inside : Side::Outside;
    const int s = rho.size();
    std::vector<int> pos_of(g.id_bound(), -1);
    for (int i = 0; i < s; ++i) pos_of[rho.verts[i]] = i;
    std::vector<char> rho_edge(g.num_darts(), 0);
    for (int i = 0; i < s; ++i) {
        const DartId d = g.dart(rho.verts[i], rho.verts[(i + 1) % s]);
        rho_edge[d] = rho_edge[g.twin(d)] = 1;
    }

    auto in_scope = [&](VertexId v) {
        return sm.vertex_side[v] == want || pos_of[v] >= 0;
    };
    // A same-cluster edge belongs to the contracted side if an endpoint is
    // strictly there, or it is a chord whose incident faces are there.
    auto edge_kept = [&](VertexId u, VertexId v) {
        if (witness.cluster_of[u] != witness.cluster_of[v]) return false;
        if (!in_scope(u) || !in_scope(v)) return false;
        const DartId d = g.dart(u, v);
        if (rho_edge[d]) return false;
        if (sm.vertex_side[u] == want || sm.vertex_side[v] == want) return true;
        return sm.face_side[g.faces().face_of_dart[d]] == want;
    };

    CycleStar cs;
    cs.rho = rho;
    cs.rho_clusters.resize(s);
    for (int i = 0; i < s; ++i) cs.rho_clusters[i] = witness.cluster_of[rho.verts[i]];
    cs.cluster_count = witness.cluster_count;
    cs.side = side;

    std::vector<char> seen(g.id_bound(), 0);
    for (VertexId start : g.vertices()) {
        if (seen[start] || !in_scope(start)) continue;
        std::vector<VertexId> comp;
        int edges = 0, interior = 0;
        std::queue<VertexId> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            if (sm.vertex_side[v] == want) ++interior;
            for (VertexId w : g.rotation(v)) {
                if (!edge_kept(v, w)) continue;
                ++edges; // counted per dart; halved below
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        edges /= 2;
        if (interior == 0 && edges == 0) continue;
        std::vector<int> attach;
        for (VertexId v : comp)
            if (pos_of[v] >= 0) attach.push_back(pos_of[v]);
        std::sort(attach.begin(), attach.end());
        if (attach.size() < 2) continue;
        cs.stars.push_back({witness.cluster_of[comp.front()], attach});
    }
    std::sort(cs.stars.begin(), cs.stars.end(),
              [](const auto& x, const auto& y) { return x.attach[0] < y.attach[0]; });
    cs.validate();
    return cs;
}

CGraph stellate(const CycleStar& cs, SideSel mode, int fresh_base) {
    cs.validate();
    const int s = cs.rho.size();
    int max_id = 0;
    for (VertexId v : cs.rho.verts) max_id = std::max(max_id, v);
    if (fresh_base < 0) fresh_base = max_id + 1;
    if (fresh_base <= max_id) fail(ErrorCode::BadParams, "fresh id base collides with rho ids");

    const int nstars = static_cast<int>(cs.stars.size());
    auto star_id = [&](int i) { return fresh_base + i; };

    // Realization: rho plus star centers in the face walking rho forward.
    std::vector<std::vector<VertexId>> rot(fresh_base + nstars);
    std::vector<int> star_at(s, -1);
    for (int i = 0; i < nstars; ++i)
        for (int p : cs.stars[i].attach) star_at[p] = i;
    for (int p = 0; p < s; ++p) {
        const VertexId v = cs.rho.verts[p];
        const VertexId nxt = cs.rho.verts[(p + 1) % s], prv = cs.rho.verts[(p + s - 1) % s];
        rot[v] = {nxt, prv};
        if (star_at[p] >= 0) rot[v].push_back(star_id(star_at[p]));
    }
    for (int i = 0; i < nstars; ++i)
        for (auto it = cs.stars[i].attach.rbegin(); it != cs.stars[i].attach.rend(); ++it)
            rot[star_id(i)].push_back(cs.rho.verts[*it]);
    EmbeddedGraph real(rot, std::make_pair(cs.rho.verts[1], cs.rho.verts[0]));

    // One apex per face except the backward rho-face.
    const FaceSet& fs = real.faces();
    const FaceId keep = fs.face_of_dart[real.dart(cs.rho.verts[1], cs.rho.verts[0])];
    const int apex_base = fresh_base + nstars;
    std::vector<std::vector<VertexId>> rot2(apex_base + fs.count() - 1);
    for (VertexId v = 0; v < static_cast<VertexId>(rot.size()); ++v) rot2[v] = {};
    std::map<std::pair<VertexId, VertexId>, VertexId> corner_apex; // (v, preceding nbr) -> apex
    int next_apex = apex_base;
    std::vector<VertexId> apex_of_face(fs.count(), -1);
    for (FaceId f = 0; f < fs.count(); ++f) {
        if (f == keep) continue;
        const VertexId a = next_apex++;
        apex_of_face[f] = a;
        for (auto it = fs.faces[f].rbegin(); it != fs.faces[f].rend(); ++it)
            rot2[a].push_back(real.head(*it));
        for (DartId d : fs.faces[f]) corner_apex[{real.head(d), real.tail(d)}] = a;
    }
    for (VertexId v : real.vertices())
        for (VertexId t : real.rotation(v)) {
            rot2[v].push_back(t);
            auto it = corner_apex.find({v, t});
            if (it != corner_apex.end()) rot2[v].push_back(it->second);
        }

    std::pair<VertexId, VertexId> outer;
    if (mode == SideSel::Inner) {
        outer = {cs.rho.verts[1], cs.rho.verts[0]};
    } else {
        const FaceId fwd = fs.face_of_dart[real.dart(cs.rho.verts[0], cs.rho.verts[1])];
        outer = {apex_of_face[fwd], cs.rho.verts[0]};
    }

    std::vector<ClusterId> cl(rot2.size(), 0);
    for (int p = 0; p < s; ++p) cl[cs.rho.verts[p]] = cs.rho_clusters[p];
    for (int i = 0; i < nstars; ++i) cl[star_id(i)] = cs.stars[i].cluster;
    int k = cs.cluster_count;
    for (VertexId a = apex_base; a < next_apex; ++a) cl[a] = k++;
    return CGraph(EmbeddedGraph(std::move(rot2), outer), std::move(cl), k);
}

} // namespace cplan
