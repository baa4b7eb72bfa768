#include "scsa/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "scsa/rng.hpp"

namespace scsa {

using nlohmann::json;

const char* game_name(GameTag g) {
    switch (g) {
        case GameTag::KTK: return "ktk";
        case GameTag::PTA: return "pta";
        case GameTag::TK: return "tk";
    }
    return "?";
}

GameTag game_from_name(const std::string& name) {
    if (name == "ktk") return GameTag::KTK;
    if (name == "pta") return GameTag::PTA;
    if (name == "tk") return GameTag::TK;
    throw std::invalid_argument("unknown game: " + name);
}

std::array<UnitStats, kNumUnitKinds> default_unit_stats() {
    std::array<UnitStats, kNumUnitKinds> s{};
    s[static_cast<int>(UnitKind::King)] = {200, 30, 1, 0, 0, 1};
    s[static_cast<int>(UnitKind::Warrior)] = {100, 25, 1, 0, 0, 1};
    s[static_cast<int>(UnitKind::Archer)] = {60, 20, 3, 0, 0, 1};
    s[static_cast<int>(UnitKind::Healer)] = {60, 0, 0, 20, 2, 1};
    s[static_cast<int>(UnitKind::Pusher)] = {1, 0, 0, 0, 0, 1};
    s[static_cast<int>(UnitKind::Worker)] = {40, 0, 0, 0, 0, 1};
    s[static_cast<int>(UnitKind::Knight)] = {120, 30, 1, 0, 0, 1};
    s[static_cast<int>(UnitKind::Wizard)] = {50, 35, 2, 0, 0, 1};
    s[static_cast<int>(UnitKind::Castle)] = {300, 0, 0, 0, 0, 0};
    return s;
}

int GameConfig::spawn_cost(UnitKind k) const {
    auto it = economy.spawn_costs.find(k);
    return it == economy.spawn_costs.end() ? -1 : it->second;
}

namespace {

json stats_to_json(const UnitStats& s) {
    return json{{"max_hp", s.max_hp},   {"attack", s.attack},       {"attack_range", s.attack_range},
                {"heal", s.heal},       {"heal_range", s.heal_range}, {"move_range", s.move_range}};
}

UnitStats stats_from_json(const json& j, UnitStats base) {
    if (j.contains("max_hp")) base.max_hp = j["max_hp"];
    if (j.contains("attack")) base.attack = j["attack"];
    if (j.contains("attack_range")) base.attack_range = j["attack_range"];
    if (j.contains("heal")) base.heal = j["heal"];
    if (j.contains("heal_range")) base.heal_range = j["heal_range"];
    if (j.contains("move_range")) base.move_range = j["move_range"];
    return base;
}

// Map rows carry terrain plus unit letters; uppercase = player 0.
void parse_board(const std::vector<std::string>& rows, GridMap* map, std::vector<Unit>* army) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("config map must be non-empty");
    GridMap m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    army->clear();
    int next_id = 0;
    for (int y = 0; y < m.height(); ++y) {
        const std::string& row = rows[y];
        if (row.size() != static_cast<std::size_t>(m.width()))
            throw std::invalid_argument("ragged map rows");
        for (int x = 0; x < m.width(); ++x) {
            const char c = row[x];
            UnitKind kind;
            const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (c != 'O' && c != 'G' && kind_from_letter(upper, &kind)) {
                // 'O'/'G' are terrain; unit letters sit on plain ground.
                Unit u;
                u.id = next_id++;
                u.owner = std::isupper(static_cast<unsigned char>(c)) ? 0 : 1;
                u.kind = kind;
                u.pos = {x, y};
                army->push_back(u);
                m.set({x, y}, Terrain::Plain);
            } else {
                m.set({x, y}, terrain_from_char(c));
            }
        }
    }
    *map = m;
}

std::vector<std::string> board_rows(const GameConfig& cfg) {
    std::vector<std::string> rows = cfg.map.to_rows();
    for (const auto& u : cfg.army) {
        char letter = kind_letter(u.kind);
        if (u.owner == 1) letter = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
        rows[u.pos.y][u.pos.x] = letter;
    }
    return rows;
}

}  // namespace

std::string GameConfig::to_json_string() const {
    json j;
    j["game"] = game_name(tag);
    j["name"] = name;
    j["round_limit"] = round_limit;
    j["rng_seed"] = rng_seed;
    j["map"] = board_rows(*this);
    json st;
    for (int i = 0; i < kNumUnitKinds; ++i)
        st[kind_name(static_cast<UnitKind>(i))] = stats_to_json(stats[i]);
    j["stats"] = st;
    json eco;
    eco["collect_yield"] = economy.collect_yield;
    eco["gold_cap"] = economy.gold_cap;
    eco["starting_gold"] = economy.starting_gold;
    json costs;
    for (const auto& [kind, cost] : economy.spawn_costs) costs[kind_name(kind)] = cost;
    eco["spawn_costs"] = costs;
    j["economy"] = eco;
    j["flags"] = json{{"pta_invert_distance_term", flags.pta_invert_distance_term},
                      {"strict_cap", flags.strict_cap},
                      {"epsilon_t_form", flags.epsilon_t_abstract ? "abstract" : "ground"},
                      {"alpha_units", flags.alpha_units_batches ? "batches" : "iterations"}};
    return j.dump(2);
}

GameConfig GameConfig::from_json_string(const std::string& text) {
    json j = json::parse(text);
    GameConfig cfg;
    cfg.tag = game_from_name(j.at("game").get<std::string>());
    cfg.name = j.value("name", std::string(game_name(cfg.tag)));
    cfg.round_limit = j.value("round_limit", 100);
    cfg.rng_seed = j.value("rng_seed", 0ULL);
    parse_board(j.at("map").get<std::vector<std::string>>(), &cfg.map, &cfg.army);
    cfg.stats = default_unit_stats();
    if (j.contains("stats")) {
        for (int i = 0; i < kNumUnitKinds; ++i) {
            const char* kn = kind_name(static_cast<UnitKind>(i));
            if (j["stats"].contains(kn)) cfg.stats[i] = stats_from_json(j["stats"][kn], cfg.stats[i]);
        }
    }
    if (j.contains("economy")) {
        const json& eco = j["economy"];
        cfg.economy.collect_yield = eco.value("collect_yield", 10);
        cfg.economy.gold_cap = eco.value("gold_cap", 100);
        cfg.economy.starting_gold = eco.value("starting_gold", 20);
        if (eco.contains("spawn_costs"))
            for (auto it = eco["spawn_costs"].begin(); it != eco["spawn_costs"].end(); ++it)
                cfg.economy.spawn_costs[kind_from_name(it.key())] = it.value().get<int>();
    }
    if (j.contains("flags")) {
        const json& f = j["flags"];
        cfg.flags.pta_invert_distance_term = f.value("pta_invert_distance_term", false);
        cfg.flags.strict_cap = f.value("strict_cap", true);
        cfg.flags.epsilon_t_abstract = f.value("epsilon_t_form", std::string("abstract")) == "abstract";
        cfg.flags.alpha_units_batches = f.value("alpha_units", std::string("batches")) == "batches";
    }
    return cfg;
}

GameConfig GameConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_string(ss.str());
}

void GameConfig::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config: " + path);
    out << to_json_string() << "\n";
}

GameState make_initial_state(const std::shared_ptr<const GameConfig>& cfg) {
    GameState s;
    s.cfg = cfg;
    s.units = cfg->army;
    int max_id = -1;
    for (auto& u : s.units) {
        u.hp = cfg->stats_for(u.kind).max_hp;
        u.acted = false;
        max_id = std::max(max_id, u.id);
    }
    s.next_unit_id = max_id + 1;
    s.gold = {cfg->economy.starting_gold, cfg->economy.starting_gold};
    s.rng_state = splitmix64(cfg->rng_seed);
    return s;
}

GameState generate_position(const std::shared_ptr<const GameConfig>& cfg, std::uint64_t seed) {
    GameState s = make_initial_state(cfg);
    Rng rng(mix_seed(0x5c5aULL, seed));
    const int w = cfg->map.width();
    const int h = cfg->map.height();

    // Kings and castles keep placement priority; everything else follows in
    // the canonical army order.
    std::vector<int> order;
    for (std::size_t i = 0; i < s.units.size(); ++i)
        if (s.units[i].kind == UnitKind::King || s.units[i].kind == UnitKind::Castle)
            order.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < s.units.size(); ++i)
        if (s.units[i].kind != UnitKind::King && s.units[i].kind != UnitKind::Castle)
            order.push_back(static_cast<int>(i));

    std::vector<Coord> taken;
    auto free_tile = [&](const Coord& c) {
        if (!cfg->map.walkable(c)) return false;
        return std::find(taken.begin(), taken.end(), c) == taken.end();
    };
    for (int idx : order) {
        Unit& u = s.units[idx];
        const int x_lo = u.owner == 0 ? 0 : (w + 1) / 2;
        const int x_hi = u.owner == 0 ? w / 2 : w;  // half-open
        for (int attempt = 0;; ++attempt) {
            if (attempt > 10000)
                throw std::runtime_error("position sampling failed: no free tile in half");
            Coord c{x_lo + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(x_hi - x_lo))),
                    static_cast<int>(rng.bounded(static_cast<std::uint64_t>(h)))};
            if (free_tile(c)) {
                u.pos = c;
                taken.push_back(c);
                break;
            }
        }
    }
    s.rng_state = splitmix64(mix_seed(cfg->rng_seed, seed));
    return s;
}

std::string default_config_dir() {
    if (const char* env = std::getenv("SCSA_CONFIG_DIR")) return env;
    std::ifstream probe("configs/ktk.cfg");
    if (probe) return "configs";
#ifdef SCSA_SOURCE_CONFIG_DIR
    return SCSA_SOURCE_CONFIG_DIR;
#else
    return "configs";
#endif
}

std::shared_ptr<const GameConfig> load_game(GameTag tag, const std::string& config_dir) {
    const std::string dir = config_dir.empty() ? default_config_dir() : config_dir;
    auto cfg = std::make_shared<GameConfig>(
        GameConfig::load(dir + "/" + game_name(tag) + ".cfg"));
    return cfg;
}

}  // namespace scsa
