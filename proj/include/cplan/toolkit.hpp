#pragma once

#include <string>
#include <vector>

#include "cplan/solver.hpp"

namespace cplan {

/// JSON instance I/O. Schema (format 1):
///   {"format": 1, "n": <present count>, "rotation": [[...]],
///    "clusters": [...], "outer": [u, v]?}
/// Cluster ids must be dense (every id in [0, max] used) at this boundary.
/// Violations raise SchemaError naming the offending field.
CGraph parse_instance(const std::string& text);
std::string serialize_instance(const CGraph& cg);

/// JSON witness I/O. Schema (format 1):
///   {"format": 1, "added": [{"face": f, "u": u, "v": v}], "origin": [...]?,
///    "basis": <instance>?}
/// Parsing resolves each added chord against the candidate edges of the
/// basis (the embedded instance when absent) and rebuilds the super graph.
Witness parse_witness(const std::string& text, const CGraph& cg);
std::string serialize_witness(const Witness& w);

/// Generators for the test families. All outputs are valid instances; bad
/// parameters raise BadParams.
///
/// clustering for the ring families: "single", "per-level" or "alternating".
CGraph gen_nested_triangles(int levels, const std::string& clustering = "single");
/// Cylinder of `length` rings of `circumference` vertices, one cluster.
CGraph gen_buckytube(int circumference, int length);
/// Nested rings of one seeded size in [3, h], optionally closed by an inner
/// apex; passes the nested-ring recognizer for this h.
CGraph gen_h_nested(int h, int levels, bool cap, unsigned seed);
/// Random maximal planar graph grown by face splits, thinned by edge
/// deletions that keep every face a simple cycle of length <= max_face;
/// clusters assigned at random. The result is 2-connected.
CGraph gen_random_planar(int n, int max_face, unsigned seed);
/// Instances whose every balanced cycle splits some cluster; kinds "basic"
/// (triangle with an apex on each side), "ring" and "deep" (concentric
/// triangles whose outermost and innermost levels share a cluster). All are
/// negative instances.
CGraph gen_cluster_separator(const std::string& kind);

/// Barycentric drawing with the outer face pinned to a regular polygon;
/// cluster hulls shaded, witness chords dashed. Deterministic text.
std::string render_svg(const CGraph& cg, const Witness* w = nullptr);

struct BenchRow {
    std::string name;
    int n = 0;
    int max_face = 0;
    std::string answer; // "yes", "no" or "timeout"
    double wall_ms = 0;
    int depth = 0;
    long long candidates = 0;
};

/// Runs the solver over the corpus with `workers` threads; rows come back
/// in corpus order. Timeouts are flagged rows, not errors.
std::vector<BenchRow> bench(const std::vector<std::pair<std::string, CGraph>>& corpus,
                            const SolveOptions& opts, int workers = 1);
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace cplan
