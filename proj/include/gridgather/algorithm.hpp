#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridgather/minmax.hpp"
#include "gridgather/symmetry.hpp"
#include "gridgather/view.hpp"

namespace gridgather {

enum class AlgoPhase : int { creating_multiplicity = 0, finalization = 1, done = 2, refuse = 3 };

const char* phase_name(AlgoPhase p);

// Rule tag carried by every planned move; the audit uses it to tell strictly
// distance-decreasing steps from the sanctioned exceptions.
enum class MoveRule : int {
    none = 0,
    toward_target,   // shortest step toward the creating-phase target
    aligned_approach,// pair stepper under a reflection axis
    axis_walk,       // on-axis robot walking along the axis
    axis_sidestep,   // on-axis robot on a diagonal axis stepping off it toward the target
    boundary_entry,  // boundary robot entering the interior
    symmetry_break,  // deliberate escape move away from a reflection axis
    finalize,        // step toward the multiplicity node
};

const char* rule_name(MoveRule r);

struct Move {
    GridNode dest;
    MoveRule rule = MoveRule::none;
};

struct PlannedMove {
    GridNode from;
    GridNode dest;
    MoveRule rule;
};

// Global decision for one weak configuration: the designated movers and their
// steps. decide() is the per-robot projection of this; the simulator shares
// one plan per configuration, which is sound because everything here is a
// pure function of the weak configuration.
struct Plan {
    AlgoPhase phase = AlgoPhase::creating_multiplicity;
    GatherClass cls;
    std::optional<GridNode> target;
    std::vector<PlannedMove> movers;
    bool flagged = false; // a fallback outside the documented cases fired
    std::string note;
};

Plan plan_moves(const WeakConfig& w);

AlgoPhase phase_of(const Snapshot& s);

// Per-robot oblivious decision: null move unless this robot is designated.
Move decide(const Snapshot& s);

// Creating-phase target for the given configuration; nullopt when the
// configuration is ungatherable or the symmetric tie cannot be resolved
// without a symmetry break.
std::optional<GridNode> select_target(const WeakConfig& w);

// The set the target may range over during the creating phase (the unique
// node, the central pair, or the four-cycle), used by the run verifier.
std::vector<GridNode> target_candidates(const WeakConfig& w);

struct MovablePredicate {
    bool movable = false;
    int rule = 0; // clause number of the movable-robot definition that fired
};

// Clause list of the movable-robot definition for C1/C2/C3 configurations.
MovablePredicate is_movable(const Snapshot& s, GridNode pos, const BoundaryCondition& cond);

} // namespace gridgather
