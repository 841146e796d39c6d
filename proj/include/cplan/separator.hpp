#pragma once

#include "cplan/embed.hpp"

namespace cplan {

struct SeparatorReport {
    Cycle cycle;
    int inside_count = 0;
    int outside_count = 0;
    int size = 0;

    int max_side() const { return std::max(inside_count, outside_count); }
};

/// Balanced simple-cycle separator of a 2-connected plane graph with a
/// designated outer face: both sides hold at most ceil(2n/3) vertices.
///
/// Faces are fanned out with subdivided virtual diagonals, a breadth
/// first tree is grown from a few sampled roots, and fundamental cycles are
/// ranked by an exact dual-subtree region count. Promising cycles are
/// projected back to real edges (virtual hops detour along the host face
/// boundary), simplified to a simple cycle, and re-checked for balance.
/// Throws TooSmall at or below the threshold, NotTwoConnected otherwise.
SeparatorReport cycle_separator(const EmbeddedGraph& g, int threshold = 3);

/// Separator for graphs recognized as nested rings of size <= h (an inner
/// cap of at most 2h vertices is allowed): picks the ring balancing the two
/// sides, each at most ceil(n/2) + 2h. Throws NotNested when ring peeling
/// fails, TooSmall when n <= 5h.
SeparatorReport nested_cycle_separator(const EmbeddedGraph& g, int h);

/// Ring peeling result; exposed for the recognizer tests and the solver's
/// path selection.
struct NestedStructure {
    std::vector<Cycle> rings; // outermost first
    std::vector<VertexId> inner_cap;
};

NestedStructure recognize_nested(const EmbeddedGraph& g, int h);

} // namespace cplan
