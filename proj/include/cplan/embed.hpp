#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cplan/error.hpp"

namespace cplan {

using VertexId = int;
using ClusterId = int;
using FaceId = int;
using DartId = int;

/// A face decomposition of an embedded graph. Faces are cyclic dart
/// sequences, canonicalized to start at the lexicographically smallest
/// dart (tail, head) and listed in ascending order of that dart, so face
/// ids are deterministic for a fixed rotation system.
struct FaceSet {
    std::vector<std::vector<DartId>> faces;
    std::vector<FaceId> face_of_dart; // indexed by dart id
    std::vector<int> lengths;

    int count() const { return static_cast<int>(faces.size()); }
};

/// Plane multigraph-free graph given by clockwise rotation systems.
///
/// Vertex ids live in a fixed id space [0, id_bound); a vertex is present
/// iff its rotation is non-empty. Sparse occupancy keeps vertex ids stable
/// across subgraph extraction and merging, which the recursion relies on.
///
/// Dart-successor convention (fixed globally): the face containing dart
/// (u -> v) continues with (v -> w), where w is the clockwise successor of
/// u in the rotation at v.
class EmbeddedGraph {
public:
    /// Validates twins, simplicity, connectivity and the Euler identity.
    explicit EmbeddedGraph(std::vector<std::vector<VertexId>> rotation,
                           std::optional<std::pair<VertexId, VertexId>> outer = std::nullopt);

    int id_bound() const { return static_cast<int>(rotation_.size()); }
    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return num_darts_ / 2; }
    bool present(VertexId v) const { return v >= 0 && v < id_bound() && !rotation_[v].empty(); }
    const std::vector<VertexId>& rotation(VertexId v) const { return rotation_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
    bool has_edge(VertexId u, VertexId v) const;

    /// All present vertex ids, ascending.
    std::vector<VertexId> vertices() const;

    int num_darts() const { return num_darts_; }
    DartId dart(VertexId u, VertexId v) const; // throws NotACycle-free lookup error via BadParams
    std::optional<DartId> find_dart(VertexId u, VertexId v) const;
    VertexId tail(DartId d) const { return dart_tail_[d]; }
    VertexId head(DartId d) const { return dart_head_[d]; }
    DartId twin(DartId d) const { return dart_twin_[d]; }
    /// Next dart of the face containing d.
    DartId face_next(DartId d) const;

    const FaceSet& faces() const { return faces_; }
    std::optional<std::pair<VertexId, VertexId>> outer_dart() const { return outer_dart_; }
    std::optional<FaceId> outer_face() const;
    /// Boundary walk of a face as the vertex sequence tail(d_0), tail(d_1), ...
    std::vector<VertexId> face_walk(FaceId f) const;

    /// Same rotation system with a different (or cleared) outer designation.
    EmbeddedGraph with_outer(std::optional<std::pair<VertexId, VertexId>> outer) const;

    bool operator==(const EmbeddedGraph& other) const;

private:
    std::vector<std::vector<VertexId>> rotation_;
    std::optional<std::pair<VertexId, VertexId>> outer_dart_;
    int num_vertices_ = 0;
    int num_darts_ = 0;

    // Dart arrays: darts of vertex v occupy [dart_offset_[v], dart_offset_[v] + deg(v)),
    // in rotation order.
    std::vector<int> dart_offset_;
    std::vector<VertexId> dart_tail_;
    std::vector<VertexId> dart_head_;
    std::vector<DartId> dart_twin_;
    std::vector<std::unordered_map<VertexId, int>> nbr_index_;
    FaceSet faces_;

    void build_darts();
    void validate();
    void compute_faces();
};

/// Simple cycle of a host graph, stored as a cyclic vertex sequence.
struct Cycle {
    std::vector<VertexId> verts;

    /// Validates simplicity and that consecutive pairs are edges of g.
    static Cycle of(const EmbeddedGraph& g, std::vector<VertexId> vs);
    int size() const { return static_cast<int>(verts.size()); }
    bool contains(VertexId v) const;
    /// Canonical rotation/reflection so equality is representation independent.
    Cycle canonical() const;
    bool operator==(const Cycle& other) const { return canonical().verts == other.canonical().verts; }
};

enum class Side { On, Inside, Outside };
enum class SideSel { Inner, Outer };

/// Vertex and face classification relative to a simple cycle, with the
/// interior defined as the side not containing the designated outer face.
struct SideMap {
    std::vector<Side> vertex_side; // indexed by vertex id; Outside for absent ids
    std::vector<Side> face_side;   // On never used for faces
    int inside_vertices = 0;
    int outside_vertices = 0;
};

SideMap classify_sides(const EmbeddedGraph& g, const Cycle& rho);

/// Builds the merge of g1 and g2 along rho, where rho bounds the outer face
/// of g1 and an inner face of g2. Vertex ids must agree on rho and be
/// disjoint elsewhere; the result keeps both id spaces.
EmbeddedGraph merge_along_cycle(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Cycle& rho);

/// Returns rho plus everything on the selected side, rotations inherited.
/// side == Inner yields G- (rho bounds its outer face); side == Outer yields
/// G+ (rho bounds an inner face, the host outer face is kept).
EmbeddedGraph subgraph_side(const EmbeddedGraph& g, const Cycle& rho, SideSel side);

/// Inserts pairwise noncrossing chords into face f, given as pairs of
/// boundary-walk occurrence positions. Endpoint pairs must be distinct
/// vertices not already adjacent.
EmbeddedGraph insert_chords_into_face(const EmbeddedGraph& g, FaceId f,
                                      const std::vector<std::pair<int, int>>& position_pairs);

/// True iff removing no single present vertex disconnects g (and n >= 3).
bool is_two_connected(const EmbeddedGraph& g);

} // namespace cplan
