#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scsa/agents.hpp"
#include "scsa/config.hpp"

namespace scsa {

struct MatchSpec {
    GameTag game = GameTag::KTK;
    AgentSpec agent_a;          // plays player 0
    AgentSpec agent_b;          // plays player 1
    std::int64_t position_seed = -1;  // < 0: canonical placement from the config
    std::uint64_t match_seed = 0;
    double move_time_cap_s = 60.0;    // exceeded -> match reported as an error row
    std::string config_dir;
};

struct MoveRecord {
    int player = 0;
    std::uint64_t fm_calls = 0;
    std::uint64_t iterations = 0;
    int tree_nodes = 0;
    int abstract_nodes = 0;
    double wall_time_ms = 0.0;
};

struct MatchResult {
    enum class Winner { A, B, Draw, Error };
    Winner winner = Winner::Draw;
    int rounds = 0;
    std::uint64_t total_fm_calls = 0;
    std::uint64_t max_move_fm_calls = 0;
    std::vector<MoveRecord> moves;
    std::string error;

    static const char* winner_name(Winner w);
};

MatchResult run_match(const MatchSpec& spec, bool keep_move_records = true);

}  // namespace scsa
