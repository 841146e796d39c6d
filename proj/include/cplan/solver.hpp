#pragma once

#include <chrono>
#include <optional>

#include "cplan/cyclestar.hpp"
#include "cplan/separator.hpp"
#include "cplan/witness.hpp"

namespace cplan {

struct SolveOptions {
    /// Instances at or below this vertex count go to the exhaustive base
    /// case directly.
    int threshold = 64;
    /// When positive, the separator first tries the nested-ring path with
    /// this ring bound and falls back to the generic cycle separator.
    int nested_h = 0;
    /// Gadget policy for test_cplanarity: Auto applies the 3-connectivity
    /// transformation only when the input is above the threshold and not
    /// 2-connected (the recursion needs 2-connectivity, the base case does
    /// not).
    enum class Gadgets { Auto, Force, Skip };
    Gadgets gadgets = Gadgets::Auto;
    /// Wall-clock budget in milliseconds; 0 disables. Exceeding it raises
    /// Timeout from inside the search.
    long long time_limit_ms = 0;
};

struct SolveStats {
    long long recursive_calls = 0;
    long long base_cases = 0;
    long long stars_tested = 0;
    long long candidates_tried = 0;
    int max_depth = 0;
};

/// Exhaustive search over subsets of the candidate saturating edges for one
/// that connects every cluster; depth-first, exclude branch first, pruned
/// by per-face noncrossing, duplicate-pair and component-merge checks.
Decision base_case(const CGraph& cg, SolveStats* stats = nullptr,
                   std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

/// The input embedding with the chosen chords inserted into their faces.
CGraph apply_saturation(const CGraph& cg, const SaturationSet& s);

/// For every cycle-star over rho: replace the interior by its stellation,
/// recurse on the resulting instance, and collect the stars whose instance
/// is c-planar, together with the returned witnesses.
std::vector<std::pair<CycleStar, Witness>>
outer_check(const CGraph& cg, const Cycle& rho, const SolveOptions& opts = {},
            SolveStats* stats = nullptr);

/// For each admissible star: contract the outer witness to a cycle-star,
/// stellate it outside rho, recurse on the interior instance, and on the
/// first YES assemble the combined witness.
Decision inner_check(const CGraph& cg, const Cycle& rho,
                     const std::vector<std::pair<CycleStar, Witness>>& admissible,
                     const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// Glues the interior of the inner witness to the exterior of the outer
/// witness along rho, drops chords redundant for cluster connectivity, and
/// re-verifies the result. Throws MergeIncompatible when the parts do not
/// combine into a valid witness for cg.
Witness assemble_witness(const CGraph& cg, const CGraph& h_minus, const CGraph& h_plus,
                         const Cycle& rho);

/// The divide-and-conquer c-connectivity augmentation test: base case below
/// the threshold, otherwise separator selection, cluster-separator check,
/// outer and inner checks.
Decision testcp(const CGraph& cg, const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// Full pipeline: enclosure precondition, optional 3-connectivity gadgets,
/// then testcp. YES decisions carry a verified witness; gadget runs record
/// the transformed basis and provenance in the witness.
Decision test_cplanarity(const CGraph& cg, const SolveOptions& opts = {},
                         SolveStats* stats = nullptr);

} // namespace cplan
