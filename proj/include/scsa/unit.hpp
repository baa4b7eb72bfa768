#pragma once

#include <string>

#include "scsa/geometry.hpp"

namespace scsa {

enum class UnitKind : unsigned char {
    King,
    Warrior,
    Archer,
    Healer,
    Pusher,
    Worker,
    Knight,
    Wizard,
    Castle,
};

inline constexpr int kNumUnitKinds = 9;

const char* kind_name(UnitKind k);
UnitKind kind_from_name(const std::string& name);
char kind_letter(UnitKind k);        // uppercase map letter
bool kind_from_letter(char c, UnitKind* out);

struct UnitStats {
    int max_hp = 1;
    int attack = 0;       // damage per attack; 0 = cannot attack
    int attack_range = 0; // Chebyshev
    int heal = 0;         // healing per heal action; 0 = cannot heal
    int heal_range = 0;
    int move_range = 1;   // 0 = immobile
};

struct Unit {
    int id = -1;
    int owner = 0;      // player 0 or 1
    UnitKind kind = UnitKind::King;
    Coord pos;
    int hp = 1;
    bool acted = false; // acted this turn; meaningful only for the side to move

    friend bool operator==(const Unit& a, const Unit& b) {
        return a.id == b.id && a.owner == b.owner && a.kind == b.kind && a.pos == b.pos &&
               a.hp == b.hp && a.acted == b.acted;
    }
};

}  // namespace scsa
