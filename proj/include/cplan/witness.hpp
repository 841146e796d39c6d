#pragma once

#include <memory>
#include <optional>

#include "cplan/gadgets.hpp"
#include "cplan/saturate.hpp"

namespace cplan {

/// A c-connected planar super c-graph certifying a YES answer. The added
/// chords are relative to `basis` when the solver transformed the input
/// (gadgets, stellation), otherwise to the queried instance itself.
struct Witness {
    CGraph super_graph;
    SaturationSet added;
    std::optional<Provenance> provenance;
    std::shared_ptr<const CGraph> basis; // null: the queried instance

    const CGraph& basis_or(const CGraph& fallback) const {
        return basis ? *basis : fallback;
    }
};

struct Decision {
    enum class Reason { ClusterSeparator, ExhaustedCandidates, ConditionII };

    bool yes = false;
    std::optional<Witness> witness;
    std::optional<Reason> reason;
    std::optional<Cycle> separator; // set with Reason::ClusterSeparator

    static Decision accept(Witness w) { return {true, std::move(w), std::nullopt, std::nullopt}; }
    static Decision reject(Reason r, std::optional<Cycle> rho = std::nullopt) {
        return {false, std::nullopt, r, std::move(rho)};
    }
};

const char* to_string(Decision::Reason r);

} // namespace cplan
