#include "cplan/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "cplan/oracle.hpp"

namespace cplan {
namespace {

bool chords_cross(const CandidateEdge& x, const CandidateEdge& y) {
    const int a = std::min(x.pos_u, x.pos_v), b = std::max(x.pos_u, x.pos_v);
    const int c = std::min(y.pos_u, y.pos_v), d = std::max(y.pos_u, y.pos_v);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Inserts the chosen chords face by face. Faces are identified by their
// boundary walk because each insertion renumbers the face set.
EmbeddedGraph augment(const CGraph& cg, const std::vector<std::vector<CandidateEdge>>& per_face) {
    EmbeddedGraph g = cg.graph;
    for (FaceId f = 0; f < static_cast<FaceId>(per_face.size()); ++f) {
        if (per_face[f].empty()) continue;
        const auto walk = cg.graph.face_walk(f);
        FaceId cur = -1;
        for (FaceId h = 0; h < g.faces().count(); ++h)
            if (g.face_walk(h) == walk) cur = h;
        if (cur < 0) fail(ErrorCode::MergeIncompatible, "face walk vanished while augmenting");
        std::vector<std::pair<int, int>> pos;
        for (const auto& c : per_face[f]) pos.emplace_back(c.pos_u, c.pos_v);
        g = insert_chords_into_face(g, cur, pos);
    }
    return g;
}

EmbeddedGraph mirrored(const EmbeddedGraph& g) {
    std::vector<std::vector<VertexId>> rot(g.id_bound());
    for (VertexId v : g.vertices()) {
        rot[v] = g.rotation(v);
        std::reverse(rot[v].begin(), rot[v].end());
    }
    std::optional<std::pair<VertexId, VertexId>> outer;
    if (const auto o = g.outer_dart()) outer = std::make_pair(o->second, o->first);
    return EmbeddedGraph(std::move(rot), outer);
}

// merge_along_cycle demands opposite rho-face orientations; stellations come
// out in a fixed chirality, so flip the stellation side when they clash.
EmbeddedGraph merge_flexible(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Cycle& rho,
                             bool mirror_first_on_clash) {
    try {
        return merge_along_cycle(g1, g2, rho);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CycleMismatch) throw;
        if (mirror_first_on_clash) return merge_along_cycle(mirrored(g1), g2, rho);
        return merge_along_cycle(g1, mirrored(g2), rho);
    }
}

struct Ctx {
    const SolveOptions& opts;
    SolveStats* stats;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

std::optional<std::chrono::steady_clock::time_point> deadline_from(const SolveOptions& opts) {
    if (opts.time_limit_ms <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.time_limit_ms);
}

Decision testcp_rec(const CGraph& cg, const Ctx& ctx, int depth, int parent_n);

std::vector<std::pair<CycleStar, Witness>> outer_check_rec(const CGraph& cg, const Cycle& rho,
                                                           const Ctx& ctx, int depth) {
    const EmbeddedGraph g_plus = subgraph_side(cg.graph, rho, SideSel::Outer);
    std::vector<std::pair<CycleStar, Witness>> admissible;
    for (const CycleStar& cs : enumerate_cycle_stars(cg, rho)) {
        if (ctx.stats) ++ctx.stats->stars_tested;
        const CGraph r = stellate(cs, SideSel::Inner, cg.graph.id_bound());
        EmbeddedGraph merged = merge_flexible(r.graph, g_plus, rho, true);
        std::vector<ClusterId> cl(merged.id_bound());
        for (VertexId v = 0; v < merged.id_bound(); ++v)
            cl[v] = v < cg.graph.id_bound() ? cg.cluster_of[v] : r.cluster_of[v];
        const CGraph inst(std::move(merged), std::move(cl), r.cluster_count);
        Decision d = testcp_rec(inst, ctx, depth + 1, cg.graph.num_vertices());
        if (d.yes) admissible.emplace_back(cs, std::move(*d.witness));
    }
    return admissible;
}

Decision inner_check_rec(const CGraph& cg, const Cycle& rho,
                         const std::vector<std::pair<CycleStar, Witness>>& admissible,
                         const Ctx& ctx, int depth) {
    const EmbeddedGraph g_minus = subgraph_side(cg.graph, rho, SideSel::Inner);
    for (const auto& [cs, wplus] : admissible) {
        const CGraph& h_plus = wplus.super_graph;
        const CycleStar sp = contract_to_cycle_star(h_plus, rho, SideSel::Outer);
        const CGraph rp = stellate(sp, SideSel::Outer, cg.graph.id_bound());
        EmbeddedGraph merged = merge_flexible(g_minus, rp.graph, rho, false);
        std::vector<ClusterId> cl(merged.id_bound());
        for (VertexId v = 0; v < merged.id_bound(); ++v)
            cl[v] = v < cg.graph.id_bound() ? cg.cluster_of[v] : rp.cluster_of[v];
        const CGraph inst(std::move(merged), std::move(cl), rp.cluster_count);
        Decision d = testcp_rec(inst, ctx, depth + 1, cg.graph.num_vertices());
        if (d.yes)
            return Decision::accept(assemble_witness(cg, d.witness->super_graph, h_plus, rho));
    }
    return Decision::reject(Decision::Reason::ExhaustedCandidates);
}

Cycle select_separator(const EmbeddedGraph& g, const Ctx& ctx) {
    if (ctx.opts.nested_h > 0) {
        try {
            return nested_cycle_separator(g, ctx.opts.nested_h).cycle;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotNested && e.code() != ErrorCode::TooSmall) throw;
        }
    }
    return cycle_separator(g).cycle;
}

Decision testcp_rec(const CGraph& cg, const Ctx& ctx, int depth, int parent_n) {
    if (ctx.stats) {
        ++ctx.stats->recursive_calls;
        ctx.stats->max_depth = std::max(ctx.stats->max_depth, depth);
    }
    if (ctx.deadline && std::chrono::steady_clock::now() > *ctx.deadline)
        fail(ErrorCode::Timeout, "time limit exceeded during recursion");
    const int n = cg.graph.num_vertices();
    if (parent_n >= 0 && n >= parent_n)
        fail(ErrorCode::BadParams, "recursive instance did not shrink: " + std::to_string(n) +
                                       " from " + std::to_string(parent_n));
    if (n <= ctx.opts.threshold) {
        if (ctx.stats) ++ctx.stats->base_cases;
        return base_case(cg, ctx.stats, ctx.deadline);
    }
    if (!is_two_connected(cg.graph))
        fail(ErrorCode::NotTwoConnected, "recursion needs a 2-connected instance");

    const Cycle rho = select_separator(cg.graph, ctx);
    if (is_cluster_separator(cg, rho))
        return Decision::reject(Decision::Reason::ClusterSeparator, rho);
    // A stellation adds at most |rho| + 1 vertices, so both recursive
    // instances shrink only when each side outweighs that. Otherwise the
    // exhaustive search is the correct (if slower) fallback; with the
    // default threshold and a balanced separator this does not trigger.
    const SideMap sm = classify_sides(cg.graph, rho);
    if (std::min(sm.inside_vertices, sm.outside_vertices) <= rho.size() + 1) {
        if (ctx.stats) ++ctx.stats->base_cases;
        return base_case(cg, ctx.stats, ctx.deadline);
    }
    const auto admissible = outer_check_rec(cg, rho, ctx, depth);
    if (admissible.empty()) return Decision::reject(Decision::Reason::ExhaustedCandidates);
    return inner_check_rec(cg, rho, admissible, ctx, depth);
}

} // namespace

Decision base_case(const CGraph& cg, SolveStats* stats,
                   std::optional<std::chrono::steady_clock::time_point> deadline) {
    const auto cands = candidate_saturating_edges(cg);
    const ClusterComponents cc = cluster_components(cg);

    // Union-find over (cluster, component) pairs; connected means one class
    // left per inhabited cluster.
    std::vector<int> offset(cg.cluster_count + 1, 0);
    int target = 0;
    for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) {
        offset[mu + 1] = offset[mu] + static_cast<int>(cc.components[mu].size());
        if (!cc.components[mu].empty()) ++target;
    }
    const int total = offset[cg.cluster_count];
    std::vector<int> parent(total);
    for (int i = 0; i < total; ++i) parent[i] = i;
    int remaining = total;
    auto node = [&](VertexId v) { return offset[cg.cluster_of[v]] + cc.component_of[v]; };
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : root(parent[x]); };

    const int fcount = cg.graph.faces().count();
    std::vector<std::vector<int>> face_chosen(fcount);
    std::vector<int> chosen;
    std::set<std::pair<VertexId, VertexId>> chosen_pairs;

    long long ticks = 0;
    std::function<bool(size_t)> dfs = [&](size_t idx) -> bool {
        if (remaining == target) return true;
        if (idx == cands.size()) return false;
        if (deadline && (++ticks & 1023) == 0 && std::chrono::steady_clock::now() > *deadline)
            fail(ErrorCode::Timeout, "time limit exceeded during exhaustive search");
        // Remaining candidates must be able to supply every missing merge.
        int useful = 0;
        for (size_t j = idx; j < cands.size() && useful < remaining - target; ++j)
            if (root(node(cands[j].u)) != root(node(cands[j].v))) ++useful;
        if (useful < remaining - target) return false;
        if (dfs(idx + 1)) return true;
        const CandidateEdge& c = cands[idx];
        if (stats) ++stats->candidates_tried;
        const int ru = root(node(c.u)), rv = root(node(c.v));
        if (ru == rv) return false; // redundant chord: exclusion already explored
        const auto key = std::make_pair(std::min(c.u, c.v), std::max(c.u, c.v));
        if (chosen_pairs.count(key)) return false;
        for (int j : face_chosen[c.face])
            if (chords_cross(cands[j], c)) return false;
        parent[rv] = ru;
        --remaining;
        chosen.push_back(static_cast<int>(idx));
        face_chosen[c.face].push_back(static_cast<int>(idx));
        chosen_pairs.insert(key);
        if (dfs(idx + 1)) return true;
        chosen_pairs.erase(key);
        face_chosen[c.face].pop_back();
        chosen.pop_back();
        ++remaining;
        parent[rv] = rv;
        return false;
    };

    if (!dfs(0)) return Decision::reject(Decision::Reason::ExhaustedCandidates);

    std::vector<std::vector<CandidateEdge>> per_face(fcount);
    Witness w{CGraph(cg.graph, cg.cluster_of, cg.cluster_count), {}, std::nullopt, nullptr};
    for (int i : chosen) {
        per_face[cands[i].face].push_back(cands[i]);
        w.added.chosen.push_back(cands[i]);
    }
    w.super_graph = CGraph(augment(cg, per_face), cg.cluster_of, cg.cluster_count);
    return Decision::accept(std::move(w));
}

std::vector<std::pair<CycleStar, Witness>> outer_check(const CGraph& cg, const Cycle& rho,
                                                       const SolveOptions& opts,
                                                       SolveStats* stats) {
    return outer_check_rec(cg, rho, Ctx{opts, stats, deadline_from(opts)}, 0);
}

Decision inner_check(const CGraph& cg, const Cycle& rho,
                     const std::vector<std::pair<CycleStar, Witness>>& admissible,
                     const SolveOptions& opts, SolveStats* stats) {
    return inner_check_rec(cg, rho, admissible, Ctx{opts, stats, deadline_from(opts)}, 0);
}

Witness assemble_witness(const CGraph& cg, const CGraph& h_minus, const CGraph& h_plus,
                         const Cycle& rho) {
    EmbeddedGraph c_in = subgraph_side(h_minus.graph, rho, SideSel::Inner);
    const EmbeddedGraph c_out = subgraph_side(h_plus.graph, rho, SideSel::Outer);

    // The two sides may have drawn the same rho chord independently; keep a
    // single copy, preferring the instance's own drawing side.
    {
        std::vector<char> on(std::max(c_in.id_bound(), cg.graph.id_bound()), 0);
        for (VertexId v : rho.verts) on[v] = 1;
        auto is_rho_edge = [&](VertexId u, VertexId v) {
            const int s = rho.size();
            for (int i = 0; i < s; ++i) {
                const VertexId a = rho.verts[i], b = rho.verts[(i + 1) % s];
                if ((a == u && b == v) || (a == v && b == u)) return true;
            }
            return false;
        };
        std::vector<std::pair<VertexId, VertexId>> drop_in;
        for (VertexId u : c_in.vertices())
            for (VertexId w : c_in.rotation(u)) {
                if (u > w || !on[u] || !on[w] || is_rho_edge(u, w)) continue;
                if (!c_out.has_edge(u, w)) continue;
                if (cg.graph.has_edge(u, w)) {
                    const FaceId f = cg.graph.faces().face_of_dart[cg.graph.dart(u, w)];
                    const SideMap sm = classify_sides(cg.graph, rho);
                    if (sm.face_side[f] == Side::Inside) continue; // keep inner original
                }
                drop_in.emplace_back(u, w);
            }
        if (!drop_in.empty()) {
            std::vector<std::vector<VertexId>> rot(c_in.id_bound());
            for (VertexId v : c_in.vertices()) rot[v] = c_in.rotation(v);
            for (auto [u, w] : drop_in) {
                rot[u].erase(std::find(rot[u].begin(), rot[u].end(), w));
                rot[w].erase(std::find(rot[w].begin(), rot[w].end(), u));
            }
            c_in = EmbeddedGraph(std::move(rot), c_in.outer_dart());
        }
    }

    EmbeddedGraph merged = [&] {
        try {
            return merge_along_cycle(c_in, c_out, rho);
        } catch (const Error& e) {
            fail(ErrorCode::MergeIncompatible,
                 std::string("witness halves do not merge: ") + e.what());
        }
    }();

    // Classify every edge absent from the instance: chords redundant for
    // cluster connectivity are dropped, the rest are matched to candidate
    // saturating edges (the incident original darts identify the host face).
    const auto cands = candidate_saturating_edges(cg);
    const ClusterComponents cc = cluster_components(cg);
    std::vector<std::pair<VertexId, VertexId>> strip;
    SaturationSet added;
    for (VertexId u : merged.vertices())
        for (VertexId w : merged.rotation(u)) {
            if (u > w || cg.graph.has_edge(u, w)) continue;
            if (cg.cluster_of[u] == cg.cluster_of[w] &&
                cc.component_of[u] == cc.component_of[w]) {
                strip.emplace_back(u, w);
                continue;
            }
            FaceId host = -1;
            for (int dir = 0; dir < 2 && host < 0; ++dir) {
                const DartId d = merged.dart(dir ? w : u, dir ? u : w);
                for (DartId e : merged.faces().faces[merged.faces().face_of_dart[d]]) {
                    const auto od = cg.graph.find_dart(merged.tail(e), merged.head(e));
                    if (od) {
                        host = cg.graph.faces().face_of_dart[*od];
                        break;
                    }
                }
            }
            const CandidateEdge* match = nullptr;
            for (const auto& c : cands) {
                if (std::minmax(c.u, c.v) != std::minmax(u, w)) continue;
                match = &c;
                if (c.face == host) break;
            }
            if (!match)
                fail(ErrorCode::MergeIncompatible,
                     "witness chord (" + std::to_string(u) + "," + std::to_string(w) +
                         ") is not a candidate saturating edge");
            added.chosen.push_back(*match);
        }

    if (!strip.empty()) {
        std::vector<std::vector<VertexId>> rot(merged.id_bound());
        for (VertexId v : merged.vertices()) rot[v] = merged.rotation(v);
        for (auto [u, w] : strip) {
            rot[u].erase(std::find(rot[u].begin(), rot[u].end(), w));
            rot[w].erase(std::find(rot[w].begin(), rot[w].end(), u));
        }
        merged = EmbeddedGraph(std::move(rot), cg.graph.outer_dart());
    } else {
        merged = merged.with_outer(cg.graph.outer_dart());
    }

    std::vector<ClusterId> cl(merged.id_bound(), 0);
    for (VertexId v = 0; v < cg.graph.id_bound() && v < static_cast<VertexId>(cl.size()); ++v)
        cl[v] = cg.cluster_of[v];
    Witness w{CGraph(std::move(merged), std::move(cl), cg.cluster_count), std::move(added),
              std::nullopt, nullptr};
    const WitnessReport rep = verify_witness(cg, w);
    if (!rep.ok)
        fail(ErrorCode::MergeIncompatible, "assembled witness rejected: " + rep.violations[0]);
    return w;
}

CGraph apply_saturation(const CGraph& cg, const SaturationSet& s) {
    return CGraph(augment(cg, s.by_face(cg.graph.faces().count())), cg.cluster_of,
                  cg.cluster_count);
}

Decision testcp(const CGraph& cg, const SolveOptions& opts, SolveStats* stats) {
    return testcp_rec(cg, Ctx{opts, stats, deadline_from(opts)}, 0, -1);
}

Decision test_cplanarity(const CGraph& cg, const SolveOptions& opts, SolveStats* stats) {
    const ConditionIIOutcome cond = check_condition_ii(cg);
    if (!cond.ok) return Decision::reject(Decision::Reason::ConditionII);

    bool apply = false;
    switch (opts.gadgets) {
    case SolveOptions::Gadgets::Force: apply = true; break;
    case SolveOptions::Gadgets::Skip: apply = false; break;
    case SolveOptions::Gadgets::Auto:
        apply = cg.graph.num_vertices() > opts.threshold && !is_two_connected(cg.graph);
        break;
    }
    if (!apply) return testcp(cg, opts, stats);

    auto [tcg, prov] = make_three_connected(cg);
    Decision d = testcp(tcg, opts, stats);
    if (!d.yes) return d;
    Witness w = std::move(*d.witness);
    w.basis = std::make_shared<const CGraph>(std::move(tcg));
    w.provenance = std::move(prov);
    return Decision::accept(std::move(w));
}

} // namespace cplan
