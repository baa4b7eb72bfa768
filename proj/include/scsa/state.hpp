#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "scsa/action.hpp"
#include "scsa/map.hpp"
#include "scsa/unit.hpp"

namespace scsa {

struct GameConfig;

struct Outcome {
    enum class Kind { Ongoing, Win, Draw };
    Kind kind = Kind::Ongoing;
    int winner = -1;  // valid when kind == Win

    bool ongoing() const { return kind == Kind::Ongoing; }
    bool terminal() const { return kind != Kind::Ongoing; }

    // Terminal score for `player`: win 1, loss -1, draw 0. Ongoing states score 0.
    int score_for(int player) const {
        if (kind != Kind::Win) return 0;
        return winner == player ? 1 : -1;
    }
};

// Full game position. Value type: copying yields an independent state.
// The config (map, stats, costs) is immutable and shared between states.
struct GameState {
    std::shared_ptr<const GameConfig> cfg;
    std::vector<Unit> units;  // living units, ascending id
    int to_move = 0;
    int round = 0;
    int next_unit_id = 0;
    std::array<int, 2> gold{0, 0};
    std::array<std::uint8_t, 2> research_done{0, 0};     // bitmask over Tech
    std::array<std::uint8_t, 2> research_pending{0, 0};  // started, completes at round end
    std::uint64_t rng_state = 0;  // seed-derived stream; carried for replay equality

    const Unit* find_unit(int id) const;
    Unit* find_unit(int id);
    const Unit* unit_at(const Coord& c) const;
    const Unit* find_king(int owner) const;  // first unit of the given kind helper
    bool occupied(const Coord& c) const { return unit_at(c) != nullptr; }

    int count_units(int owner) const;
    int count_kind(int owner, UnitKind k) const;

    bool tech_done(int player, Tech t) const {
        return (research_done[player] >> static_cast<int>(t)) & 1;
    }
    bool tech_pending(int player, Tech t) const {
        return (research_pending[player] >> static_cast<int>(t)) & 1;
    }

    // Canonical serialization; two states are replay-equal iff the strings match.
    std::string serialize() const;
    // 64-bit fingerprint of serialize(); identifies states for transition comparisons.
    std::uint64_t fingerprint() const;

    // Equality over game content (config identity is not compared).
    friend bool operator==(const GameState& a, const GameState& b);
};

}  // namespace scsa
