#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scsa/map.hpp"
#include "scsa/state.hpp"
#include "scsa/unit.hpp"

namespace scsa {

enum class GameTag { KTK, PTA, TK };

const char* game_name(GameTag g);
GameTag game_from_name(const std::string& name);

struct Economy {
    int collect_yield = 10;
    int gold_cap = 100;        // heuristic normaliser, not a hard cap
    int starting_gold = 20;
    std::map<UnitKind, int> spawn_costs;
};

struct ConfigFlags {
    bool pta_invert_distance_term = false;
    bool strict_cap = true;            // full groups reject new members
    bool epsilon_t_abstract = true;    // false: ground-successor form
    bool alpha_units_batches = true;   // alpha values are multiples of the batch size
};

// A complete game definition: terrain, armies, stats, economy. Loaded from the
// JSON .cfg files under configs/ (schema in docs/config-schema.md).
struct GameConfig {
    GameTag tag = GameTag::KTK;
    std::string name;
    GridMap map;
    std::vector<Unit> army;  // initial placement; ids assigned in scan order
    int round_limit = 100;
    std::array<UnitStats, kNumUnitKinds> stats{};
    Economy economy;
    ConfigFlags flags;
    std::uint64_t rng_seed = 0;

    const UnitStats& stats_for(UnitKind k) const { return stats[static_cast<int>(k)]; }
    int spawn_cost(UnitKind k) const;

    std::string to_json_string() const;
    static GameConfig from_json_string(const std::string& text);

    static GameConfig load(const std::string& path);
    void save(const std::string& path) const;
};

// Built-in stat defaults; configs may override any entry.
std::array<UnitStats, kNumUnitKinds> default_unit_stats();

// Initial state with the config's canonical army placement.
GameState make_initial_state(const std::shared_ptr<const GameConfig>& cfg);

// Seeded initial-position variant: terrain is kept, armies are re-placed by
// uniform rejection sampling of free tiles inside each player's half of the
// map (player 0 left, player 1 right). Kings and castles are placed first.
GameState generate_position(const std::shared_ptr<const GameConfig>& cfg, std::uint64_t seed);

// Resolves the directory holding ktk.cfg / pta.cfg / tk.cfg:
// $SCSA_CONFIG_DIR if set, else ./configs, else the build-time source path.
std::string default_config_dir();
std::shared_ptr<const GameConfig> load_game(GameTag tag, const std::string& config_dir = "");

}  // namespace scsa
