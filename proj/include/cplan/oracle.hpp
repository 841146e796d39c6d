#pragma once

#include <string>
#include <vector>

#include "cplan/witness.hpp"

namespace cplan {

/// Exhaustive ground-truth decision. Enumerates, per face, every noncrossing
/// subset of that face's candidate chords and takes the cartesian product
/// across faces, the empty saturation first. Independent of the solver's
/// search. Throws TooLarge above the candidate cap.
Decision brute_force_cplanar(const CGraph& cg, int candidate_cap = 30);

struct WitnessReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks a witness against the instance it claims to saturate: the super
/// graph minus the added chords must equal cg, every added chord must be a
/// candidate saturating edge, chords per face noncrossing, all clusters
/// connected, and the super graph a valid embedding.
WitnessReport verify_witness(const CGraph& cg, const Witness& w);

} // namespace cplan
