#pragma once

#include <vector>

#include "cplan/cgraph.hpp"

namespace cplan {

/// Maps each vertex of a transformed instance back to the input: either an
/// original vertex or a gadget vertex with its anchor edge or vertex.
struct Provenance {
    enum class Kind {
        Original,    // input vertex, id preserved
        Subdivision, // midpoint of an anchor edge
        SidePath,    // detour vertex beside an anchor edge, one per side
        Ring,        // ring vertex around an anchor vertex
        Apex,        // stellation apex, no anchor
    };
    struct Origin {
        Kind kind = Kind::Original;
        VertexId vertex = -1;   // original id, or the ring anchor
        VertexId anchor_u = -1; // anchor edge endpoints where applicable
        VertexId anchor_v = -1;
    };

    std::vector<Origin> origin; // indexed by transformed vertex id

    /// Composition: origins of `later` resolved through this provenance.
    Provenance then(const Provenance& later) const;
};

/// Subdivides every edge (c,x) with a midpoint w and adds two length-2
/// detours (c,w1,x),(c,w2,x), one in each face beside the edge, plus the
/// edges (w,w1),(w,w2). New vertices join c's cluster (c = smaller endpoint).
/// Output has minimum degree 3 and every block 2-connected at each vertex.
std::pair<CGraph, Provenance> edge_gadget(const CGraph& cg);

/// Subdivides every edge once more and joins consecutive subdivision
/// vertices around each vertex c into a ring, inside the face they share.
/// Requires minimum degree 3; the composed output is 3-connected.
std::pair<CGraph, Provenance> vertex_ring_gadget(const CGraph& cg);

/// edge_gadget followed by vertex_ring_gadget, provenances composed.
std::pair<CGraph, Provenance> make_three_connected(const CGraph& cg);

/// Exhaustive check: n >= 4, no cut vertex and no separation pair.
bool is_three_connected(const EmbeddedGraph& g);

} // namespace cplan
