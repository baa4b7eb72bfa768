#pragma once

#include <cstdint>
#include <vector>

#include "scsa/action.hpp"
#include "scsa/state.hpp"

namespace scsa {

inline constexpr int kAnyActor = -2;

// Move targets within the unit's move range: breadth-first over free tiles,
// sorted lexicographically. Empty for immobile units.
std::vector<Coord> reachable_tiles(const GameState& s, const Unit& u);

// Every legal action for one unit. Includes DoNothing for any eligible unit.
// Throws std::invalid_argument for unknown ids or units of the waiting player.
std::vector<UnitAction> legal_actions_for(const GameState& s, int unit_id);

// actor == kAnyActor: all eligible units' actions plus EndTurn.
std::vector<UnitAction> legal_actions(const GameState& s, int actor = kAnyActor);

// Applies a legal action and returns the successor. Marks the actor as acted;
// ends the turn automatically once every living unit of the mover has acted.
// Throws std::invalid_argument on any illegal action.
GameState apply_action(const GameState& s, const UnitAction& a);

Outcome terminal_outcome(const GameState& s);

// Forward-model wrapper owned by one search context; `calls` increases by
// exactly 1 per step.
struct ForwardModel {
    std::uint64_t calls = 0;
    GameState step(const GameState& s, const UnitAction& a) {
        ++calls;
        return apply_action(s, a);
    }
};

}  // namespace scsa
