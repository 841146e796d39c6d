#include <algorithm>
#include <map>

#include <json.hpp>

#include "cplan/toolkit.hpp"

namespace cplan {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::SchemaError, "input is not valid JSON");
    if (!j.is_object()) fail(ErrorCode::SchemaError, "top level must be an object");
    return j;
}

void check_format(const json& j) {
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"] != 1)
        fail(ErrorCode::SchemaError, "format: expected 1");
}

int get_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        fail(ErrorCode::SchemaError, std::string(field) + ": expected an integer");
    return j[field].get<int>();
}

json instance_json(const CGraph& cg) {
    json j;
    j["format"] = 1;
    j["n"] = cg.graph.num_vertices();
    json rot = json::array();
    for (VertexId v = 0; v < cg.graph.id_bound(); ++v) rot.push_back(cg.graph.rotation(v));
    j["rotation"] = std::move(rot);
    // Densify cluster ids for the wire format, in order of smallest member.
    std::map<ClusterId, ClusterId> dense;
    for (VertexId v : cg.graph.vertices())
        dense.try_emplace(cg.cluster_of[v], static_cast<ClusterId>(dense.size()));
    json cl = json::array();
    for (VertexId v = 0; v < cg.graph.id_bound(); ++v)
        cl.push_back(cg.graph.present(v) ? dense.at(cg.cluster_of[v]) : 0);
    j["clusters"] = std::move(cl);
    if (const auto o = cg.graph.outer_dart()) j["outer"] = {o->first, o->second};
    return j;
}

CGraph instance_from_json(const json& j) {
    check_format(j);
    if (!j.contains("rotation") || !j["rotation"].is_array())
        fail(ErrorCode::SchemaError, "rotation: expected an array of arrays");
    std::vector<std::vector<VertexId>> rot;
    for (const json& row : j["rotation"]) {
        if (!row.is_array()) fail(ErrorCode::SchemaError, "rotation: expected an array of arrays");
        std::vector<VertexId> r;
        for (const json& x : row) {
            if (!x.is_number_integer()) fail(ErrorCode::SchemaError, "rotation: non-integer entry");
            r.push_back(x.get<int>());
        }
        rot.push_back(std::move(r));
    }
    if (!j.contains("clusters") || !j["clusters"].is_array())
        fail(ErrorCode::SchemaError, "clusters: expected an array");
    std::vector<ClusterId> clusters;
    for (const json& x : j["clusters"]) {
        if (!x.is_number_integer()) fail(ErrorCode::SchemaError, "clusters: non-integer entry");
        clusters.push_back(x.get<int>());
    }
    if (clusters.size() != rot.size())
        fail(ErrorCode::SchemaError, "clusters: length differs from rotation");

    std::optional<std::pair<VertexId, VertexId>> outer;
    if (j.contains("outer")) {
        if (!j["outer"].is_array() || j["outer"].size() != 2)
            fail(ErrorCode::SchemaError, "outer: expected a pair [u, v]");
        outer = std::make_pair(j["outer"][0].get<int>(), j["outer"][1].get<int>());
    }

    EmbeddedGraph g(std::move(rot), outer);
    if (get_int(j, "n") != g.num_vertices())
        fail(ErrorCode::SchemaError, "n: does not match the number of present vertices");

    // Wire-format clusters are dense over the present vertices.
    std::vector<bool> used;
    int top = -1;
    for (VertexId v : g.vertices()) {
        const ClusterId c = clusters[v];
        if (c < 0) fail(ErrorCode::SchemaError, "clusters: negative id");
        if (c >= static_cast<int>(used.size())) used.resize(c + 1, false);
        used[c] = true;
        top = std::max(top, c);
    }
    for (int c = 0; c <= top; ++c)
        if (!used[c])
            fail(ErrorCode::SchemaError, "clusters: id " + std::to_string(c) + " is unused");
    return CGraph(std::move(g), std::move(clusters), top + 1);
}

const char* kind_name(Provenance::Kind k) {
    switch (k) {
    case Provenance::Kind::Original: return "original";
    case Provenance::Kind::Subdivision: return "subdivision";
    case Provenance::Kind::SidePath: return "sidepath";
    case Provenance::Kind::Ring: return "ring";
    case Provenance::Kind::Apex: return "apex";
    }
    return "original";
}

Provenance::Kind kind_from(const std::string& s) {
    if (s == "original") return Provenance::Kind::Original;
    if (s == "subdivision") return Provenance::Kind::Subdivision;
    if (s == "sidepath") return Provenance::Kind::SidePath;
    if (s == "ring") return Provenance::Kind::Ring;
    if (s == "apex") return Provenance::Kind::Apex;
    fail(ErrorCode::SchemaError, "origin: unknown kind " + s);
}

} // namespace

CGraph parse_instance(const std::string& text) { return instance_from_json(parse_json(text)); }

std::string serialize_instance(const CGraph& cg) { return instance_json(cg).dump(2) + "\n"; }

std::string serialize_witness(const Witness& w) {
    json j;
    j["format"] = 1;
    json added = json::array();
    for (const CandidateEdge& c : w.added.chosen)
        added.push_back({{"face", c.face}, {"u", c.u}, {"v", c.v}});
    j["added"] = std::move(added);
    if (w.provenance) {
        json origin = json::array();
        for (const auto& o : w.provenance->origin)
            origin.push_back({{"kind", kind_name(o.kind)},
                              {"vertex", o.vertex},
                              {"anchor", {o.anchor_u, o.anchor_v}}});
        j["origin"] = std::move(origin);
    }
    if (w.basis) j["basis"] = instance_json(*w.basis);
    return j.dump(2) + "\n";
}

Witness parse_witness(const std::string& text, const CGraph& cg) {
    const json j = parse_json(text);
    check_format(j);
    if (!j.contains("added") || !j["added"].is_array())
        fail(ErrorCode::SchemaError, "added: expected an array of chords");

    Witness w{cg, {}, std::nullopt, nullptr};
    if (j.contains("basis")) w.basis = std::make_shared<CGraph>(instance_from_json(j["basis"]));
    const CGraph& basis = w.basis_or(cg);

    const auto cands = candidate_saturating_edges(basis);
    for (const json& a : j["added"]) {
        const FaceId f = get_int(a, "face");
        const VertexId u = get_int(a, "u"), v = get_int(a, "v");
        const auto it = std::find_if(cands.begin(), cands.end(), [&](const CandidateEdge& c) {
            return c.face == f && ((c.u == u && c.v == v) || (c.u == v && c.v == u));
        });
        if (it == cands.end())
            fail(ErrorCode::SchemaError, "added: chord (" + std::to_string(u) + ", " +
                                             std::to_string(v) + ") in face " + std::to_string(f) +
                                             " is not a candidate of the basis instance");
        w.added.chosen.push_back(*it);
    }
    if (j.contains("origin")) {
        if (!j["origin"].is_array()) fail(ErrorCode::SchemaError, "origin: expected an array");
        Provenance p;
        for (const json& o : j["origin"]) {
            if (!o.contains("kind") || !o["kind"].is_string())
                fail(ErrorCode::SchemaError, "origin: entry without a kind");
            Provenance::Origin og;
            og.kind = kind_from(o["kind"].get<std::string>());
            og.vertex = get_int(o, "vertex");
            if (o.contains("anchor") && o["anchor"].is_array() && o["anchor"].size() == 2) {
                og.anchor_u = o["anchor"][0].get<int>();
                og.anchor_v = o["anchor"][1].get<int>();
            }
            p.origin.push_back(og);
        }
        w.provenance = std::move(p);
    }
    w.super_graph = apply_saturation(basis, w.added);
    return w;
}

} // namespace cplan
