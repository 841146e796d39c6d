#pragma once

#include <string>
#include <vector>

#include "cplan/saturate.hpp"

namespace cplan {

/// One named set declaration: an edge set (pairs with u < v) or a vertex set.
struct SetLabel {
    std::string name;
    bool is_edge_set = false;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> vertices;
};

/// Abstract syntax of the emitted formula: a second-order existential over a
/// declared edge set, conjunction, and named predicates whose semantics live
/// in the model checker (`planar`, `connected`).
struct Formula {
    enum class Kind { Exists, And, Pred };
    Kind kind = Kind::Pred;
    std::string var;               // Exists: the bound set variable
    std::string domain;            // Exists: name of the set it ranges over
    std::string pred;              // Pred: predicate name
    std::vector<std::string> args; // Pred: argument set names
    std::vector<Formula> children; // Exists body (exactly one) or conjuncts
};

/// The logic instance: the input, its candidate supergraph, the labeled sets
/// E_G (input edges), E* (candidate chords) and V1..Vc (vertex sets of the
/// disconnected clusters), and the saturation formula
/// exists E+ subset of E*: planar(E_G, E+) and connected(Vi, E_G, E+) for
/// each i.
struct FormulaInstance {
    CGraph base;
    DiamondGraph graph;
    std::vector<SetLabel> labels;
    Formula formula;
};

/// Builds the labels and formula for cg. The `planar` predicate is sound
/// only when the embedding is the unique one, which needs 3-connectivity;
/// with strict set, non-3-connected inputs raise NotThreeConnected, the
/// default accepts them (callers apply make_three_connected first when they
/// care).
FormulaInstance emit_mso2(const CGraph& cg, bool strict = false);

/// Deterministic prefix text: one (set ...) declaration per label, then
/// (formula ...).
std::string render_mso(const FormulaInstance& fi);

/// Declarations plus formula recovered from the text format.
struct ParsedMso {
    std::vector<SetLabel> labels;
    Formula formula;
};

ParsedMso parse_mso(const std::string& text);
std::string render_mso(const ParsedMso& pm);

/// Evaluates the formula by enumerating subsets of the existential's domain.
/// `planar` holds when the chosen chords can be hosted in offering faces
/// pairwise noncrossing; `connected` holds when the vertex set is connected
/// through set-internal edges of E_G union E+. Domains larger than cap raise
/// TooLarge.
bool naive_model_check(const FormulaInstance& fi, int cap = 20);

} // namespace cplan
