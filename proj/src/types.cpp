#include <stdexcept>

#include "scsa/action.hpp"
#include "scsa/map.hpp"
#include "scsa/unit.hpp"

namespace scsa {

char terrain_char(Terrain t) {
    switch (t) {
        case Terrain::Plain: return '.';
        case Terrain::Wall: return '#';
        case Terrain::Hole: return 'O';
        case Terrain::GoldVein: return 'G';
    }
    return '?';
}

Terrain terrain_from_char(char c) {
    switch (c) {
        case '.': return Terrain::Plain;
        case '#': return Terrain::Wall;
        case 'O': return Terrain::Hole;
        case 'G': return Terrain::GoldVein;
        default: throw std::invalid_argument(std::string("unknown terrain char: ") + c);
    }
}

std::vector<Coord> GridMap::tiles_of(Terrain t) const {
    std::vector<Coord> out;
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (at({x, y}) == t) out.push_back({x, y});
    return out;
}

std::vector<std::string> GridMap::to_rows() const {
    std::vector<std::string> rows;
    rows.reserve(height_);
    for (int y = 0; y < height_; ++y) {
        std::string row(width_, '.');
        for (int x = 0; x < width_; ++x) row[x] = terrain_char(at({x, y}));
        rows.push_back(std::move(row));
    }
    return rows;
}

GridMap GridMap::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("map must have at least one row and column");
    GridMap m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < m.height(); ++y) {
        if (rows[y].size() != static_cast<std::size_t>(m.width()))
            throw std::invalid_argument("ragged map rows");
        for (int x = 0; x < m.width(); ++x) m.set({x, y}, terrain_from_char(rows[y][x]));
    }
    return m;
}

namespace {
constexpr const char* kKindNames[kNumUnitKinds] = {
    "king", "warrior", "archer", "healer", "pusher", "worker", "knight", "wizard", "castle"};
constexpr char kKindLetters[kNumUnitKinds] = {'K', 'W', 'A', 'H', 'P', 'R', 'N', 'Z', 'C'};
}  // namespace

const char* kind_name(UnitKind k) { return kKindNames[static_cast<int>(k)]; }

UnitKind kind_from_name(const std::string& name) {
    for (int i = 0; i < kNumUnitKinds; ++i)
        if (name == kKindNames[i]) return static_cast<UnitKind>(i);
    throw std::invalid_argument("unknown unit kind: " + name);
}

char kind_letter(UnitKind k) { return kKindLetters[static_cast<int>(k)]; }

bool kind_from_letter(char c, UnitKind* out) {
    for (int i = 0; i < kNumUnitKinds; ++i) {
        if (c == kKindLetters[i]) {
            *out = static_cast<UnitKind>(i);
            return true;
        }
    }
    return false;
}

const char* verb_name(Verb v) {
    switch (v) {
        case Verb::Move: return "move";
        case Verb::Attack: return "attack";
        case Verb::Heal: return "heal";
        case Verb::Push: return "push";
        case Verb::Spawn: return "spawn";
        case Verb::Research: return "research";
        case Verb::Collect: return "collect";
        case Verb::DoNothing: return "do-nothing";
        case Verb::EndTurn: return "end-turn";
    }
    return "?";
}

UnitAction UnitAction::move(int actor, Coord to) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::Move;
    a.tx = to.x;
    a.ty = to.y;
    return a;
}

UnitAction UnitAction::attack(int actor, int target) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::Attack;
    a.target_unit = target;
    return a;
}

UnitAction UnitAction::heal(int actor, int target) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::Heal;
    a.target_unit = target;
    return a;
}

UnitAction UnitAction::push(int actor, int move_dir, int neighbour_dir, int push_dir) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::Push;
    a.move_dir = move_dir;
    a.neighbour_dir = neighbour_dir;
    a.push_dir = push_dir;
    return a;
}

UnitAction UnitAction::spawn(int actor, UnitKind kind) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::Spawn;
    a.kind = kind;
    return a;
}

UnitAction UnitAction::research(int actor, Tech tech) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::Research;
    a.tech = tech;
    return a;
}

UnitAction UnitAction::collect(int actor) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::Collect;
    return a;
}

UnitAction UnitAction::do_nothing(int actor) {
    UnitAction a;
    a.actor = actor;
    a.verb = Verb::DoNothing;
    return a;
}

UnitAction UnitAction::end_turn() {
    UnitAction a;
    a.actor = kNoActor;
    a.verb = Verb::EndTurn;
    return a;
}

std::pair<std::uint64_t, std::uint64_t> UnitAction::key() const {
    // Small signed fields get a +8 bias so they pack as non-negative nibbles.
    auto nib = [](int v) { return static_cast<std::uint64_t>(v + 8) & 0xf; };
    std::uint64_t hi = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(actor)) << 8) |
                       static_cast<std::uint64_t>(verb);
    std::uint64_t lo = (static_cast<std::uint64_t>(static_cast<std::uint16_t>(tx)) << 48) |
                       (static_cast<std::uint64_t>(static_cast<std::uint16_t>(ty)) << 32) |
                       (static_cast<std::uint64_t>(static_cast<std::uint16_t>(target_unit)) << 16) |
                       (static_cast<std::uint64_t>(kind) << 12) | (nib(move_dir) << 8) |
                       (nib(neighbour_dir) << 4) | nib(push_dir);
    lo ^= static_cast<std::uint64_t>(tech) << 60;
    return {hi, lo};
}

std::string UnitAction::to_string() const {
    std::string s = verb_name(verb);
    if (actor != kNoActor) s += " u" + std::to_string(actor);
    switch (verb) {
        case Verb::Move:
            s += " -> (" + std::to_string(tx) + "," + std::to_string(ty) + ")";
            break;
        case Verb::Attack:
        case Verb::Heal:
            s += " -> u" + std::to_string(target_unit);
            break;
        case Verb::Push: {
            static const char* d = "NESW";
            s += " [";
            s += move_dir == kStay ? '.' : d[move_dir];
            s += d[neighbour_dir];
            s += d[push_dir];
            s += "]";
            break;
        }
        case Verb::Spawn:
            s += std::string(" ") + kind_name(kind);
            break;
        case Verb::Research:
            s += " mining";
            break;
        default:
            break;
    }
    return s;
}

}  // namespace scsa
