#pragma once

#include <vector>

#include "cplan/cgraph.hpp"

namespace cplan {

/// A potential chord between reference vertices of two boundary components
/// of one cluster inside one face. Positions are occurrence indices in the
/// face's boundary walk, so faces with repeated vertices are handled.
struct CandidateEdge {
    FaceId face;
    VertexId u, v; // u's position precedes v's
    ClusterId cluster;
    int pos_u, pos_v;

    bool same_chord(const CandidateEdge& o) const {
        return face == o.face && u == o.u && v == o.v;
    }
};

/// A chosen subset of candidate saturating edges.
struct SaturationSet {
    std::vector<CandidateEdge> chosen;

    /// Chosen chords grouped per face id.
    std::vector<std::vector<CandidateEdge>> by_face(int face_count) const;
};

/// All candidate saturating edges, ordered by face, then cluster, then
/// boundary positions. Within a face and cluster, boundary components are
/// maximal runs of same-cluster vertices joined by same-cluster boundary
/// edges; one candidate per pair of runs whose vertices lie in different
/// components of the induced cluster subgraph.
std::vector<CandidateEdge> candidate_saturating_edges(const CGraph& cg);

/// True iff the chosen chords are pairwise noncrossing within each face,
/// pairwise distinct as abstract edges, and make every cluster connected.
/// Chords not in the candidate set raise ForeignEdge.
bool is_valid_saturation(const CGraph& cg, const SaturationSet& s);

/// Abstract (possibly nonplanar) supergraph holding the input edges plus
/// all candidate saturating edges, deduplicated by endpoint pair.
struct DiamondGraph {
    struct StarEdge {
        VertexId u, v; // u < v
        ClusterId cluster;
        std::vector<FaceId> faces; // faces offering this chord
    };

    int id_bound = 0;
    std::vector<std::pair<VertexId, VertexId>> base_edges; // u < v, sorted
    std::vector<StarEdge> star_edges;                      // sorted by (u, v)
    std::vector<ClusterId> cluster_of;
    int cluster_count = 0;
};

DiamondGraph build_diamond(const CGraph& cg);

} // namespace cplan
