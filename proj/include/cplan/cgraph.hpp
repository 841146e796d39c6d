#pragma once

#include <optional>
#include <vector>

#include "cplan/embed.hpp"

namespace cplan {

/// Flat clustered plane graph: every present vertex belongs to exactly one
/// cluster. Cluster ids live in [0, cluster_count); instances built by the
/// recursion may leave some ids unused, serialized instances are dense.
struct CGraph {
    EmbeddedGraph graph;
    std::vector<ClusterId> cluster_of; // indexed by vertex id; ignored for absent ids
    int cluster_count = 0;

    CGraph(EmbeddedGraph g, std::vector<ClusterId> clusters, int k);

    ClusterId cluster(VertexId v) const { return cluster_of[v]; }
    /// Present vertices of cluster mu, ascending.
    std::vector<VertexId> cluster_vertices(ClusterId mu) const;
};

/// Connected components of every induced cluster subgraph G(mu).
struct ClusterComponents {
    std::vector<std::vector<std::vector<VertexId>>> components; // [cluster][component] -> vertices
    std::vector<int> component_of;                              // vertex -> component index in its cluster

    bool is_connected(ClusterId mu) const { return components[mu].size() <= 1; }
    int disconnected_cluster_count() const;
};

ClusterComponents cluster_components(const CGraph& cg);

/// Result of the enclosure precondition check: either the set of admissible
/// outer faces, or a certificate (cluster, face next to the enclosed vertex,
/// enclosed vertex).
struct ConditionIIOutcome {
    bool ok = false;
    std::vector<FaceId> admissible_outer_faces;
    struct Violation {
        ClusterId cluster;
        FaceId enclosing_face;
        VertexId enclosed_vertex;
    };
    std::optional<Violation> violation; // for the designated (or first tried) outer face
};

/// Checks that no monochromatic cycle encloses a vertex of another cluster.
/// With a designated outer face only that face is tested; otherwise every
/// face is tried as the outer choice.
ConditionIIOutcome check_condition_ii(const CGraph& cg);

/// True iff some cluster has vertices strictly inside and strictly outside
/// rho while avoiding rho entirely.
bool is_cluster_separator(const CGraph& cg, const Cycle& rho);

} // namespace cplan
