#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "scsa/geometry.hpp"
#include "scsa/unit.hpp"

namespace scsa {

enum class Verb : unsigned char {
    Move,      // actor steps to tile (tx, ty)
    Attack,    // actor damages target_unit
    Heal,      // actor heals target_unit
    Push,      // pusher triple: (move_dir | stay, neighbour_dir, push_dir)
    Spawn,     // castle creates a unit of `kind`
    Research,  // castle researches tech
    Collect,   // worker gathers gold from an adjacent vein
    DoNothing, // actor passes
    EndTurn,   // no actor; hands the turn to the opponent
};

const char* verb_name(Verb v);

enum class Tech : unsigned char { Mining };

inline constexpr int kNoActor = -1;
inline constexpr int kStay = -1;  // push move component: do not move

// One atomic action. Unused fields stay at their defaults so that value
// equality and the packed key are well defined across all verbs.
struct UnitAction {
    int actor = kNoActor;
    Verb verb = Verb::DoNothing;
    int tx = -1, ty = -1;       // Move
    int target_unit = -1;       // Attack / Heal
    UnitKind kind = UnitKind::King;  // Spawn
    int move_dir = -2;          // Push: kStay or 0..3
    int neighbour_dir = -1;     // Push: 0..3
    int push_dir = -1;          // Push: 0..3
    Tech tech = Tech::Mining;   // Research

    static UnitAction move(int actor, Coord to);
    static UnitAction attack(int actor, int target);
    static UnitAction heal(int actor, int target);
    static UnitAction push(int actor, int move_dir, int neighbour_dir, int push_dir);
    static UnitAction spawn(int actor, UnitKind kind);
    static UnitAction research(int actor, Tech tech);
    static UnitAction collect(int actor);
    static UnitAction do_nothing(int actor);
    static UnitAction end_turn();

    // Canonical order- and hash-friendly encoding; equal keys <=> equal actions.
    std::pair<std::uint64_t, std::uint64_t> key() const;

    std::string to_string() const;

    friend bool operator==(const UnitAction& a, const UnitAction& b) { return a.key() == b.key(); }
    friend bool operator!=(const UnitAction& a, const UnitAction& b) { return !(a == b); }
    friend bool operator<(const UnitAction& a, const UnitAction& b) { return a.key() < b.key(); }
};

}  // namespace scsa
