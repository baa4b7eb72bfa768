#pragma once

#include <optional>
#include <string>

#include "scsa/config.hpp"
#include "scsa/search.hpp"

namespace scsa {

enum class AgentKind { Rule, Mcts, Mctsu, Rg, Elastic, Scsa };

const char* agent_name(AgentKind k);
AgentKind agent_from_name(const std::string& name);

// Published per-game parameters (exploration factor, rollout length, early
// stop, error thresholds, size limit) for every agent, plus the per-game
// forward-model budgets. These are the tournament defaults.
SearchParams default_params(GameTag game, AgentKind kind);
std::uint64_t default_budget(GameTag game);

struct AgentSpec {
    AgentKind kind = AgentKind::Rule;
    SearchParams params;  // ignored for Rule

    static AgentSpec make(GameTag game, AgentKind kind);
    static AgentSpec make(GameTag game, const std::string& name);
};

// Applies overrides from a JSON parameter file ({"ktk": {"scsa": {"c": 0.2 }}}).
void apply_param_overrides(const std::string& json_text, GameTag game, AgentKind kind,
                           SearchParams* params);

// Per-match agent state: the fixed unit ordering and the per-move seeds.
class Agent {
public:
    Agent(AgentSpec spec, int player, std::uint64_t match_seed);

    // Called once with the match's initial state (fixes the unit ordering).
    void start_game(const GameState& initial);

    // One unit action for the side to move. Search agents run a fresh search.
    UnitAction act(const GameState& s, SearchStats* stats = nullptr);

    const AgentSpec& spec() const { return spec_; }
    int player() const { return player_; }

private:
    AgentSpec spec_;
    int player_;
    std::uint64_t match_seed_;
    std::uint64_t move_counter_ = 0;
    UnitOrdering ordering_;
    bool uses_ordering_ = false;
};

}  // namespace scsa
