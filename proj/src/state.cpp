#include "scsa/state.hpp"

#include <algorithm>

#include "scsa/config.hpp"
#include "scsa/rng.hpp"

namespace scsa {

const Unit* GameState::find_unit(int id) const {
    for (const auto& u : units)
        if (u.id == id) return &u;
    return nullptr;
}

Unit* GameState::find_unit(int id) {
    for (auto& u : units)
        if (u.id == id) return &u;
    return nullptr;
}

const Unit* GameState::unit_at(const Coord& c) const {
    for (const auto& u : units)
        if (u.pos == c) return &u;
    return nullptr;
}

const Unit* GameState::find_king(int owner) const {
    for (const auto& u : units)
        if (u.owner == owner && u.kind == UnitKind::King) return &u;
    return nullptr;
}

int GameState::count_units(int owner) const {
    int n = 0;
    for (const auto& u : units) n += (u.owner == owner);
    return n;
}

int GameState::count_kind(int owner, UnitKind k) const {
    int n = 0;
    for (const auto& u : units) n += (u.owner == owner && u.kind == k);
    return n;
}

std::string GameState::serialize() const {
    std::string s;
    s.reserve(64 + units.size() * 24);
    auto put = [&s](long long v) {
        s += std::to_string(v);
        s += ',';
    };
    put(to_move);
    put(round);
    put(next_unit_id);
    put(gold[0]);
    put(gold[1]);
    put(research_done[0]);
    put(research_done[1]);
    put(research_pending[0]);
    put(research_pending[1]);
    put(static_cast<long long>(rng_state));
    s += '|';
    for (const auto& u : units) {
        put(u.id);
        put(u.owner);
        put(static_cast<int>(u.kind));
        put(u.pos.x);
        put(u.pos.y);
        put(u.hp);
        put(u.acted ? 1 : 0);
        s += ';';
    }
    return s;
}

std::uint64_t GameState::fingerprint() const {
    // FNV-1a over the canonical serialization, folded through splitmix.
    const std::string s = serialize();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(h);
}

bool operator==(const GameState& a, const GameState& b) {
    return a.to_move == b.to_move && a.round == b.round && a.next_unit_id == b.next_unit_id &&
           a.gold == b.gold && a.research_done == b.research_done &&
           a.research_pending == b.research_pending && a.rng_state == b.rng_state &&
           a.units == b.units;
}

}  // namespace scsa
