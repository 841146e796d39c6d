#pragma once

#include <vector>

#include "cplan/cgraph.hpp"

namespace cplan {

/// A cycle rho plus star vertices attached to it: removing rho's edges
/// leaves a forest of stars. Stars are stored as attachment position sets
/// (indices into rho.verts); canonical form keeps only stars with >= 2
/// attachments, pairwise disjoint and noncrossing in rho's cyclic order.
struct CycleStar {
    Cycle rho;
    std::vector<ClusterId> rho_clusters; // aligned with rho.verts
    int cluster_count = 0;               // of the host instance
    struct Star {
        ClusterId cluster;
        std::vector<int> attach; // positions, ascending
    };
    std::vector<Star> stars;
    SideSel side = SideSel::Inner;

    bool operator==(const CycleStar& o) const;
    /// Throws on any violated canonical-form invariant.
    void validate() const;
};

/// All canonical cycle-stars over rho: noncrossing partitions of rho's
/// positions whose blocks of size >= 2 are monochromatic and become stars.
/// Deterministic order, the all-singleton (empty) cycle-star first; count
/// is at most Catalan(|rho|).
std::vector<CycleStar> enumerate_cycle_stars(const CGraph& cg, const Cycle& rho);

/// Contracts the chosen side of a c-connected witness onto rho: each
/// component of a cluster's subgraph on that side (interior vertices,
/// interior edges and same-side chords, rho vertices of the cluster)
/// becomes a star attached at its rho vertices; single-attachment
/// components are dropped. Throws ClusterSeparatorCycle or NotCConnected.
CycleStar contract_to_cycle_star(const CGraph& witness, const Cycle& rho, SideSel side);

/// Realizes cs as a plane c-graph: rho, star vertices on one side, then one
/// fresh apex inside every face except the rho-face on the opposite side.
/// Star and apex ids start at fresh_base (default: past rho's ids); apexes
/// get fresh singleton clusters. mode Inner: rho bounds the outer face;
/// mode Outer: rho bounds an inner face and the outer face is a triangle.
CGraph stellate(const CycleStar& cs, SideSel mode, int fresh_base = -1);

} // namespace cplan
