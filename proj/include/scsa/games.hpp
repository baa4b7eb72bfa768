#pragma once

#include <cstdint>

#include "scsa/action.hpp"
#include "scsa/config.hpp"
#include "scsa/state.hpp"

namespace scsa {

// State evaluation in [0, 1] for non-terminal states, from `player`'s
// perspective. Terminal states are scored by Outcome, not these.
double heuristic_ktk(const GameState& s, int player);
double heuristic_pta(const GameState& s, int player);
double heuristic_tk(const GameState& s, int player);
double heuristic(const GameState& s, int player);  // dispatch on the config's game tag

// Scripted opponent. Returns the action for the lowest-id unit of the side to
// move that has not acted yet; falls back to DoNothing when no rule fires.
UnitAction rule_based_policy(const GameState& s);

// Product of per-unit legal-action counts over the mover's un-acted units:
// the joint action space a non-unit-ordered agent faces this turn.
std::uint64_t enumerate_joint_action_count(const GameState& s);

}  // namespace scsa
