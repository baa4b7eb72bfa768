#include "scsa/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "scsa/config.hpp"

namespace scsa {

namespace {

bool eligible(const GameState& s, const Unit& u) {
    return u.owner == s.to_move && !u.acted && u.hp > 0;
}

// Breadth-first flood over free tiles up to the unit's move range, in
// deterministic lexicographic wave order. Paths may not cross occupied or
// unwalkable tiles.
std::vector<Coord> reachable_frontier(const GameState& s, const Unit& u) {
    const int range = s.cfg->stats_for(u.kind).move_range;
    std::vector<Coord> reached;
    if (range < 1) return reached;
    std::vector<Coord> frontier{u.pos};
    for (int step = 0; step < range; ++step) {
        std::vector<Coord> next;
        for (const Coord& from : frontier) {
            for (const Coord& d : kDirs) {
                const Coord to = from + d;
                if (!s.cfg->map.walkable(to) || s.occupied(to)) continue;
                if (to == u.pos) continue;
                bool seen = std::find(reached.begin(), reached.end(), to) != reached.end();
                if (!seen) {
                    reached.push_back(to);
                    next.push_back(to);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(reached.begin(), reached.end(),
              [](const Coord& a, const Coord& b) { return lex_less(a, b); });
    return reached;
}

const Unit& checked_actor(const GameState& s, int unit_id) {
    const Unit* u = s.find_unit(unit_id);
    if (!u) throw std::invalid_argument("unknown unit id " + std::to_string(unit_id));
    if (u->owner != s.to_move)
        throw std::invalid_argument("unit " + std::to_string(unit_id) + " belongs to the waiting player");
    if (u->acted)
        throw std::invalid_argument("unit " + std::to_string(unit_id) + " has already acted");
    return *u;
}

void append_moves(const GameState& s, const Unit& u, std::vector<UnitAction>& out) {
    for (const Coord& to : reachable_tiles(s, u)) out.push_back(UnitAction::move(u.id, to));
}

void append_attacks(const GameState& s, const Unit& u, std::vector<UnitAction>& out) {
    const UnitStats& st = s.cfg->stats_for(u.kind);
    if (st.attack <= 0) return;
    for (const Unit& t : s.units)
        if (t.owner != u.owner && chebyshev(u.pos, t.pos) <= st.attack_range)
            out.push_back(UnitAction::attack(u.id, t.id));
}

void append_heals(const GameState& s, const Unit& u, std::vector<UnitAction>& out) {
    const UnitStats& st = s.cfg->stats_for(u.kind);
    if (st.heal <= 0) return;
    for (const Unit& t : s.units)
        if (t.owner == u.owner && t.hp < s.cfg->stats_for(t.kind).max_hp &&
            chebyshev(u.pos, t.pos) <= st.heal_range)
            out.push_back(UnitAction::heal(u.id, t.id));
}

bool adjacent_to_terrain(const GameState& s, const Coord& pos, Terrain t) {
    for (const Coord& d : kNeighbours8) {
        const Coord c = pos + d;
        if (s.cfg->map.in_bounds(c) && s.cfg->map.at(c) == t) return true;
    }
    return false;
}

bool find_spawn_tile(const GameState& s, const Coord& castle, Coord* out) {
    for (const Coord& d : kNeighbours8) {
        const Coord c = castle + d;
        if (s.cfg->map.walkable(c) && !s.occupied(c)) {
            *out = c;
            return true;
        }
    }
    return false;
}

void append_castle_actions(const GameState& s, const Unit& u, std::vector<UnitAction>& out) {
    if (!s.tech_done(u.owner, Tech::Mining) && !s.tech_pending(u.owner, Tech::Mining))
        out.push_back(UnitAction::research(u.id, Tech::Mining));
    Coord spawn_tile;
    if (!find_spawn_tile(s, u.pos, &spawn_tile)) return;
    for (const auto& [kind, cost] : s.cfg->economy.spawn_costs) {
        if (s.gold[u.owner] < cost) continue;
        if (kind == UnitKind::Worker && !s.tech_done(u.owner, Tech::Mining)) continue;
        out.push_back(UnitAction::spawn(u.id, kind));
    }
}

// Pusher actions are the full (move | stay, neighbour, push-direction)
// triples; the push component resolves against whatever occupies the selected
// neighbour tile after the move, and does nothing when no enemy stands there.
void append_pusher_actions(const GameState& s, const Unit& u, std::vector<UnitAction>& out) {
    for (int mv = kStay; mv < 4; ++mv) {
        if (mv != kStay) {
            const Coord to = u.pos + kDirs[mv];
            if (!s.cfg->map.walkable(to) || s.occupied(to)) continue;
        }
        for (int nb = 0; nb < 4; ++nb)
            for (int pd = 0; pd < 4; ++pd) out.push_back(UnitAction::push(u.id, mv, nb, pd));
    }
}

void append_unit_actions(const GameState& s, const Unit& u, std::vector<UnitAction>& out) {
    if (u.kind == UnitKind::Pusher) {
        append_pusher_actions(s, u, out);
        return;
    }
    // DoNothing leads so that exact value ties resolve to standing still.
    out.push_back(UnitAction::do_nothing(u.id));
    append_moves(s, u, out);
    append_attacks(s, u, out);
    append_heals(s, u, out);
    if (u.kind == UnitKind::Worker && adjacent_to_terrain(s, u.pos, Terrain::GoldVein))
        out.push_back(UnitAction::collect(u.id));
    if (u.kind == UnitKind::Castle) append_castle_actions(s, u, out);
}

void remove_unit(GameState& s, int unit_id) {
    s.units.erase(std::remove_if(s.units.begin(), s.units.end(),
                                 [unit_id](const Unit& u) { return u.id == unit_id; }),
                  s.units.end());
}

void flip_turn(GameState& s) {
    for (auto& u : s.units) u.acted = false;
    s.to_move ^= 1;
    if (s.to_move == 0) {
        // Player 0 opens every round; both players have now moved.
        s.round += 1;
        for (int p = 0; p < 2; ++p) {
            s.research_done[p] |= s.research_pending[p];
            s.research_pending[p] = 0;
        }
    }
}

void finish_unit_action(GameState& s, int actor_id) {
    if (Unit* u = s.find_unit(actor_id)) u->acted = true;
    for (const auto& u : s.units)
        if (eligible(s, u)) return;
    flip_turn(s);
}

}  // namespace

std::vector<Coord> reachable_tiles(const GameState& s, const Unit& u) {
    return reachable_frontier(s, u);
}

std::vector<UnitAction> legal_actions_for(const GameState& s, int unit_id) {
    const Unit& u = checked_actor(s, unit_id);
    std::vector<UnitAction> out;
    out.reserve(16);
    append_unit_actions(s, u, out);
    return out;
}

std::vector<UnitAction> legal_actions(const GameState& s, int actor) {
    std::vector<UnitAction> out;
    if (actor != kAnyActor) {
        out.reserve(16);
        append_unit_actions(s, checked_actor(s, actor), out);
        return out;
    }
    out.reserve(64);
    for (const Unit& u : s.units)
        if (eligible(s, u)) append_unit_actions(s, u, out);
    out.push_back(UnitAction::end_turn());
    return out;
}

GameState apply_action(const GameState& s, const UnitAction& a) {
    GameState next = s;

    if (a.verb == Verb::EndTurn) {
        if (a.actor != kNoActor) throw std::invalid_argument("end-turn carries no actor");
        flip_turn(next);
        return next;
    }

    // Copy: unit-vector mutations below would invalidate a reference.
    const Unit actor = checked_actor(next, a.actor);
    const UnitStats& st = next.cfg->stats_for(actor.kind);

    switch (a.verb) {
        case Verb::Move: {
            const Coord to{a.tx, a.ty};
            const auto tiles = reachable_tiles(next, actor);
            if (std::find(tiles.begin(), tiles.end(), to) == tiles.end())
                throw std::invalid_argument("illegal move");
            next.find_unit(a.actor)->pos = to;
            break;
        }
        case Verb::Attack: {
            Unit* t = next.find_unit(a.target_unit);
            if (st.attack <= 0 || !t || t->owner == actor.owner ||
                chebyshev(actor.pos, t->pos) > st.attack_range)
                throw std::invalid_argument("illegal attack");
            t->hp -= st.attack;
            if (t->hp <= 0) remove_unit(next, a.target_unit);
            break;
        }
        case Verb::Heal: {
            Unit* t = next.find_unit(a.target_unit);
            if (st.heal <= 0 || !t || t->owner != actor.owner ||
                chebyshev(actor.pos, t->pos) > st.heal_range)
                throw std::invalid_argument("illegal heal");
            const int max_hp = next.cfg->stats_for(t->kind).max_hp;
            if (t->hp >= max_hp) throw std::invalid_argument("heal target at full health");
            t->hp = std::min(max_hp, t->hp + st.heal);
            break;
        }
        case Verb::Push: {
            if (actor.kind != UnitKind::Pusher) throw std::invalid_argument("only pushers push");
            if (a.move_dir < kStay || a.move_dir > 3 || a.neighbour_dir < 0 || a.neighbour_dir > 3 ||
                a.push_dir < 0 || a.push_dir > 3)
                throw std::invalid_argument("malformed push triple");
            Unit* self = next.find_unit(a.actor);
            if (a.move_dir != kStay) {
                const Coord to = self->pos + kDirs[a.move_dir];
                if (!next.cfg->map.walkable(to) || next.occupied(to))
                    throw std::invalid_argument("illegal push move component");
                self->pos = to;
            }
            const Coord sel = self->pos + kDirs[a.neighbour_dir];
            const Unit* target = next.cfg->map.in_bounds(sel) ? next.unit_at(sel) : nullptr;
            if (target && target->owner != self->owner) {
                const Coord dest = target->pos + kDirs[a.push_dir];
                if (next.cfg->map.in_bounds(dest)) {
                    if (next.cfg->map.at(dest) == Terrain::Hole) {
                        remove_unit(next, target->id);
                    } else if (next.cfg->map.walkable(dest) && !next.occupied(dest)) {
                        next.find_unit(target->id)->pos = dest;
                    }
                    // blocked destination: the push has no effect
                }
            }
            break;
        }
        case Verb::Spawn: {
            if (actor.kind != UnitKind::Castle) throw std::invalid_argument("only castles spawn");
            const int cost = next.cfg->spawn_cost(a.kind);
            if (cost < 0 || next.gold[actor.owner] < cost)
                throw std::invalid_argument("cannot afford spawn");
            if (a.kind == UnitKind::Worker && !next.tech_done(actor.owner, Tech::Mining))
                throw std::invalid_argument("worker requires mining research");
            Coord tile;
            if (!find_spawn_tile(next, actor.pos, &tile))
                throw std::invalid_argument("no free tile next to the castle");
            next.gold[actor.owner] -= cost;
            Unit u;
            u.id = next.next_unit_id++;
            u.owner = actor.owner;
            u.kind = a.kind;
            u.pos = tile;
            u.hp = next.cfg->stats_for(a.kind).max_hp;
            u.acted = true;  // spawned units act from the next turn on
            next.units.push_back(u);
            break;
        }
        case Verb::Research: {
            if (actor.kind != UnitKind::Castle) throw std::invalid_argument("only castles research");
            if (next.tech_done(actor.owner, a.tech) || next.tech_pending(actor.owner, a.tech))
                throw std::invalid_argument("research already done or pending");
            next.research_pending[actor.owner] |= static_cast<std::uint8_t>(1u << static_cast<int>(a.tech));
            break;
        }
        case Verb::Collect: {
            if (actor.kind != UnitKind::Worker) throw std::invalid_argument("only workers collect");
            if (!adjacent_to_terrain(next, actor.pos, Terrain::GoldVein))
                throw std::invalid_argument("no gold vein in reach");
            next.gold[actor.owner] += next.cfg->economy.collect_yield;
            break;
        }
        case Verb::DoNothing:
            break;
        case Verb::EndTurn:
            break;  // handled above
    }

    finish_unit_action(next, a.actor);
    return next;
}

Outcome terminal_outcome(const GameState& s) {
    const GameConfig& cfg = *s.cfg;
    if (cfg.tag == GameTag::PTA) {
        for (int p = 0; p < 2; ++p)
            if (s.count_kind(p, UnitKind::Pusher) == 0) return {Outcome::Kind::Win, 1 - p};
    } else {
        for (int p = 0; p < 2; ++p)
            if (!s.find_king(p)) return {Outcome::Kind::Win, 1 - p};
    }
    if (s.round >= cfg.round_limit) return {Outcome::Kind::Draw, -1};
    return {};
}

}  // namespace scsa
