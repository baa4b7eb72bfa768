#include "scsa/games.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "scsa/engine.hpp"

namespace scsa {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

bool is_combat_kind(UnitKind k) {
    return k == UnitKind::Warrior || k == UnitKind::Knight || k == UnitKind::Wizard;
}

int initial_count(const GameConfig& cfg, int owner) {
    int n = 0;
    for (const auto& u : cfg.army) n += (u.owner == owner);
    return n;
}

}  // namespace

double heuristic_ktk(const GameState& s, int player) {
    const Unit* king = s.find_king(1 - player);
    if (!king) throw std::runtime_error("enemy king missing on a non-terminal state");
    int d = 0;
    int allies = 0;
    for (const auto& u : s.units) {
        if (u.owner != player) continue;
        d += manhattan(u.pos, king->pos);
        ++allies;
    }
    if (allies == 0) return 0.0;
    const double cap_d = static_cast<double>(allies) * s.cfg->map.diameter();
    const double h = king->hp;
    const double max_h = s.cfg->stats_for(UnitKind::King).max_hp;
    return clamp01(1.0 - (d * h) / (cap_d * max_h));
}

double heuristic_pta(const GameState& s, int player) {
    double min_dist_sum = 0.0;
    int allies = 0;
    for (const auto& u : s.units) {
        if (u.owner != player) continue;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& e : s.units)
            if (e.owner != player) best = std::min(best, euclid(u.pos, e.pos));
        if (std::isfinite(best)) min_dist_sum += best;
        ++allies;
    }
    const double cap = static_cast<double>(allies) * s.cfg->map.diagonal();
    double term1 = 0.0;
    if (allies > 0 && cap > 0.0) {
        const double frac = clamp01(min_dist_sum / cap);
        term1 = 0.2 * (s.cfg->flags.pta_invert_distance_term ? 1.0 - frac : frac);
    }
    const int own0 = initial_count(*s.cfg, player);
    const int opp0 = initial_count(*s.cfg, 1 - player);
    const double term2 = own0 > 0 ? 0.4 * s.count_units(player) / own0 : 0.0;
    const double term3 =
        opp0 > 0 ? 0.4 * (opp0 - s.count_units(1 - player)) / static_cast<double>(opp0) : 0.0;
    return clamp01(term1 + term2 + term3);
}

double heuristic_tk(const GameState& s, int player) {
    const GameConfig& cfg = *s.cfg;
    const double diameter = cfg.map.diameter();
    double score = 0.0;
    if (s.tech_done(player, Tech::Mining)) score += 0.2;

    bool worker_alive = false;
    bool combat_alive = false;
    for (const auto& u : s.units) {
        if (u.owner != player) continue;
        worker_alive |= u.kind == UnitKind::Worker;
        combat_alive |= is_combat_kind(u.kind);
    }
    if (worker_alive) score += 0.1;
    if (combat_alive) score += 0.1;

    // Workers near veins: mean distance of living workers to the closest vein.
    const std::vector<Coord> veins = cfg.map.tiles_of(Terrain::GoldVein);
    if (worker_alive && !veins.empty()) {
        double total = 0.0;
        int workers = 0;
        for (const auto& u : s.units) {
            if (u.owner != player || u.kind != UnitKind::Worker) continue;
            int best = std::numeric_limits<int>::max();
            for (const auto& v : veins) best = std::min(best, manhattan(u.pos, v));
            total += best;
            ++workers;
        }
        score += 0.1 * (1.0 - clamp01(total / workers / diameter));
    }

    score += 0.2 * std::min(1.0, static_cast<double>(s.gold[player]) / cfg.economy.gold_cap);

    // Attack term: proximity of the three most advanced combat units to the
    // enemy king. Extra units help until the strike team is full, and the
    // marching gradient never saturates; non-combat units are excluded so
    // the score never rewards marching the king or the workers into danger.
    const Unit* enemy_king = s.find_king(1 - player);
    if (enemy_king) {
        std::vector<double> proximities;
        for (const auto& u : s.units) {
            if (u.owner != player || !is_combat_kind(u.kind)) continue;
            proximities.push_back(1.0 - clamp01(manhattan(u.pos, enemy_king->pos) / diameter));
        }
        std::sort(proximities.rbegin(), proximities.rend());
        double advance = 0.0;
        for (std::size_t i = 0; i < proximities.size() && i < 3; ++i) advance += proximities[i];
        score += 0.3 * (advance / 3.0);
    }
    return clamp01(score);
}

double heuristic(const GameState& s, int player) {
    switch (s.cfg->tag) {
        case GameTag::KTK: return heuristic_ktk(s, player);
        case GameTag::PTA: return heuristic_pta(s, player);
        case GameTag::TK: return heuristic_tk(s, player);
    }
    return 0.5;
}

namespace {

const Unit* next_unacted(const GameState& s) {
    const Unit* best = nullptr;
    for (const auto& u : s.units)
        if (u.owner == s.to_move && !u.acted && (!best || u.id < best->id)) best = &u;
    return best;
}

// Strictly distance-reducing move toward `goal`; ties by lexicographic tile.
std::optional<Coord> step_toward(const GameState& s, const Unit& u, const Coord& goal) {
    std::optional<Coord> best;
    int best_dist = manhattan(u.pos, goal);
    for (const Coord& to : reachable_tiles(s, u)) {
        const int dist = manhattan(to, goal);
        if (dist < best_dist || (dist == best_dist && best && lex_less(to, *best))) {
            best = to;
            best_dist = dist;
        }
    }
    return best;
}

const Unit* strongest_ally(const GameState& s, const Unit& healer) {
    const Unit* best = nullptr;
    for (const auto& u : s.units) {
        if (u.owner != healer.owner || u.id == healer.id) continue;
        if (!best) {
            best = &u;
            continue;
        }
        const int a = s.cfg->stats_for(u.kind).max_hp;
        const int b = s.cfg->stats_for(best->kind).max_hp;
        if (a > b || (a == b && u.id < best->id)) best = &u;
    }
    return best;
}

UnitAction ktk_unit_action(const GameState& s, const Unit& u) {
    const UnitStats& st = s.cfg->stats_for(u.kind);
    if (st.heal > 0) {
        const Unit* target = strongest_ally(s, u);
        if (!target) return UnitAction::do_nothing(u.id);
        const bool damaged = target->hp < s.cfg->stats_for(target->kind).max_hp;
        if (damaged && chebyshev(u.pos, target->pos) <= st.heal_range)
            return UnitAction::heal(u.id, target->id);
        if (auto to = step_toward(s, u, target->pos)) return UnitAction::move(u.id, *to);
        return UnitAction::do_nothing(u.id);
    }
    // Attacker: hunt the most isolated enemy. Isolation rises with our units
    // nearby and falls with the enemy's own support, radius 2 Chebyshev.
    const Unit* target = nullptr;
    int best_iso = std::numeric_limits<int>::min();
    for (const auto& e : s.units) {
        if (e.owner == u.owner) continue;
        int iso = 0;
        for (const auto& other : s.units) {
            if (other.id == e.id) continue;
            if (chebyshev(other.pos, e.pos) <= 2) iso += other.owner == u.owner ? 1 : -1;
        }
        if (!target || iso > best_iso || (iso == best_iso && e.id < target->id)) {
            target = &e;
            best_iso = iso;
        }
    }
    if (!target) return UnitAction::do_nothing(u.id);
    if (st.attack > 0 && chebyshev(u.pos, target->pos) <= st.attack_range)
        return UnitAction::attack(u.id, target->id);
    if (auto to = step_toward(s, u, target->pos)) return UnitAction::move(u.id, *to);
    return UnitAction::do_nothing(u.id);
}

UnitAction pta_unit_action(const GameState& s, const Unit& u) {
    const Unit* target = nullptr;
    for (const auto& e : s.units) {
        if (e.owner == u.owner) continue;
        if (!target || manhattan(u.pos, e.pos) < manhattan(u.pos, target->pos) ||
            (manhattan(u.pos, e.pos) == manhattan(u.pos, target->pos) && e.id < target->id))
            target = &e;
    }
    if (!target) return UnitAction::push(u.id, kStay, 0, 0);

    const std::vector<Coord> holes = s.cfg->map.tiles_of(Terrain::Hole);
    auto dist_to_hole = [&holes](const Coord& c) {
        int best = std::numeric_limits<int>::max();
        for (const auto& h : holes) best = std::min(best, manhattan(c, h));
        return best;
    };

    for (int dir = 0; dir < 4; ++dir) {
        if (u.pos + kDirs[dir] != target->pos) continue;
        // Adjacent: push in the direction that brings the enemy closest to a
        // hole; landing in one counts as distance -1.
        int best_push = 0;
        int best_dist = std::numeric_limits<int>::max();
        for (int pd = 0; pd < 4; ++pd) {
            const Coord dest = target->pos + kDirs[pd];
            int dist;
            if (!s.cfg->map.in_bounds(dest)) {
                dist = dist_to_hole(target->pos);  // blocked: no movement
            } else if (s.cfg->map.at(dest) == Terrain::Hole) {
                dist = -1;
            } else if (!s.cfg->map.walkable(dest) || s.occupied(dest)) {
                dist = dist_to_hole(target->pos);
            } else {
                dist = dist_to_hole(dest);
            }
            if (dist < best_dist) {
                best_dist = dist;
                best_push = pd;
            }
        }
        return UnitAction::push(u.id, kStay, dir, best_push);
    }

    if (auto to = step_toward(s, u, target->pos)) {
        for (int mv = 0; mv < 4; ++mv) {
            if (u.pos + kDirs[mv] != *to) continue;
            // Plain approach: aim the neighbour selector at an enemy-free tile
            // so the move has no push side effect.
            int nb = 0;
            for (int cand = 0; cand < 4; ++cand) {
                const Coord c = *to + kDirs[cand];
                const Unit* occ = s.cfg->map.in_bounds(c) ? s.unit_at(c) : nullptr;
                if (!occ || occ->owner == u.owner) {
                    nb = cand;
                    break;
                }
            }
            return UnitAction::push(u.id, mv, nb, 0);
        }
    }
    return UnitAction::push(u.id, kStay, 0, 0);
}

UnitAction tk_unit_action(const GameState& s, const Unit& u) {
    const GameConfig& cfg = *s.cfg;
    if (u.kind == UnitKind::Castle) {
        if (!s.tech_done(u.owner, Tech::Mining) && !s.tech_pending(u.owner, Tech::Mining))
            return UnitAction::research(u.id, Tech::Mining);
        const bool can_place = [&] {
            for (const Coord& d : kNeighbours8) {
                const Coord c = u.pos + d;
                if (cfg.map.walkable(c) && !s.occupied(c)) return true;
            }
            return false;
        }();
        if (can_place && s.tech_done(u.owner, Tech::Mining) &&
            s.count_kind(u.owner, UnitKind::Worker) < 1 &&
            s.gold[u.owner] >= cfg.spawn_cost(UnitKind::Worker))
            return UnitAction::spawn(u.id, UnitKind::Worker);
        if (can_place && s.count_kind(u.owner, UnitKind::Warrior) < 2 &&
            s.gold[u.owner] >= cfg.spawn_cost(UnitKind::Warrior))
            return UnitAction::spawn(u.id, UnitKind::Warrior);
        return UnitAction::do_nothing(u.id);
    }
    if (u.kind == UnitKind::Worker) {
        bool near_vein = false;
        for (const Coord& d : kNeighbours8) {
            const Coord c = u.pos + d;
            if (cfg.map.in_bounds(c) && cfg.map.at(c) == Terrain::GoldVein) near_vein = true;
        }
        if (near_vein) return UnitAction::collect(u.id);
        const std::vector<Coord> veins = cfg.map.tiles_of(Terrain::GoldVein);
        const Coord* best = nullptr;
        for (const auto& v : veins)
            if (!best || manhattan(u.pos, v) < manhattan(u.pos, *best) ||
                (manhattan(u.pos, v) == manhattan(u.pos, *best) && lex_less(v, *best)))
                best = &v;
        if (best)
            if (auto to = step_toward(s, u, *best)) return UnitAction::move(u.id, *to);
        return UnitAction::do_nothing(u.id);
    }
    if (u.kind == UnitKind::King) {
        const UnitStats& st = cfg.stats_for(u.kind);
        const Unit* in_range = nullptr;
        for (const auto& e : s.units)
            if (e.owner != u.owner && chebyshev(u.pos, e.pos) <= st.attack_range &&
                (!in_range || e.id < in_range->id))
                in_range = &e;
        if (in_range) return UnitAction::attack(u.id, in_range->id);
        return UnitAction::do_nothing(u.id);
    }
    // Combat units wait until the army is assembled, then march on the king,
    // attacking whatever stands in range along the way (the king first).
    if (is_combat_kind(u.kind)) {
        const UnitStats& st = cfg.stats_for(u.kind);
        const Unit* king = s.find_king(1 - u.owner);
        if (st.attack > 0 && king && chebyshev(u.pos, king->pos) <= st.attack_range)
            return UnitAction::attack(u.id, king->id);
        if (st.attack > 0) {
            const Unit* in_range = nullptr;
            for (const auto& e : s.units)
                if (e.owner != u.owner && chebyshev(u.pos, e.pos) <= st.attack_range &&
                    (!in_range || e.id < in_range->id))
                    in_range = &e;
            if (in_range) return UnitAction::attack(u.id, in_range->id);
        }
        if (s.count_kind(u.owner, UnitKind::Warrior) < 2) return UnitAction::do_nothing(u.id);
        if (!king) return UnitAction::do_nothing(u.id);
        if (auto to = step_toward(s, u, king->pos)) return UnitAction::move(u.id, *to);
        return UnitAction::do_nothing(u.id);
    }
    return UnitAction::do_nothing(u.id);
}

}  // namespace

UnitAction rule_based_policy(const GameState& s) {
    const Unit* u = next_unacted(s);
    if (!u) return UnitAction::end_turn();
    switch (s.cfg->tag) {
        case GameTag::KTK: return ktk_unit_action(s, *u);
        case GameTag::PTA: return pta_unit_action(s, *u);
        case GameTag::TK: return tk_unit_action(s, *u);
    }
    return UnitAction::do_nothing(u->id);
}

std::uint64_t enumerate_joint_action_count(const GameState& s) {
    unsigned __int128 product = 1;
    for (const auto& u : s.units) {
        if (u.owner != s.to_move || u.acted) continue;
        const auto actions = legal_actions_for(s, u.id);
        product *= static_cast<unsigned __int128>(actions.size());
        if (product > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(product);
}

}  // namespace scsa
