#include "scsa/agents.hpp"

#include <stdexcept>

#include <json.hpp>

#include "scsa/games.hpp"

namespace scsa {

using nlohmann::json;

const char* agent_name(AgentKind k) {
    switch (k) {
        case AgentKind::Rule: return "rule";
        case AgentKind::Mcts: return "mcts";
        case AgentKind::Mctsu: return "mctsu";
        case AgentKind::Rg: return "rg";
        case AgentKind::Elastic: return "elastic";
        case AgentKind::Scsa: return "scsa";
    }
    return "?";
}

AgentKind agent_from_name(const std::string& name) {
    if (name == "rule") return AgentKind::Rule;
    if (name == "mcts") return AgentKind::Mcts;
    if (name == "mctsu") return AgentKind::Mctsu;
    if (name == "rg") return AgentKind::Rg;
    if (name == "elastic") return AgentKind::Elastic;
    if (name == "scsa") return AgentKind::Scsa;
    throw std::invalid_argument("unknown agent: " + name);
}

std::uint64_t default_budget(GameTag game) {
    return game == GameTag::TK ? 5000 : 10000;
}

// Published per-game tuning. alpha entries are in batches and get multiplied
// by B; eta_r/eta_t/size limits are shared between elastic and scsa.
SearchParams default_params(GameTag game, AgentKind kind) {
    SearchParams p;
    p.n_fm = default_budget(game);
    p.batch = 20;
    double alpha_batches = 0;
    switch (game) {
        case GameTag::KTK:
            switch (kind) {
                case AgentKind::Mcts: p.c = 0.1; p.rollout_len = 10; break;
                case AgentKind::Mctsu: p.c = 1.0; p.rollout_len = 10; break;
                case AgentKind::Rg: p.c = 0.1; p.rollout_len = 10; alpha_batches = 8; break;
                case AgentKind::Elastic:
                    p.c = 0.1; p.rollout_len = 10; alpha_batches = 10; p.eta_r = 0.05; p.eta_t = 1.0;
                    break;
                case AgentKind::Scsa:
                    p.c = 0.1; p.rollout_len = 10; p.eta_r = 0.05; p.eta_t = 1.0; p.size_limit = 2;
                    break;
                case AgentKind::Rule: break;
            }
            break;
        case GameTag::PTA:
            switch (kind) {
                case AgentKind::Mcts: p.c = 10.0; p.rollout_len = 10; break;
                case AgentKind::Mctsu: p.c = 10.0; p.rollout_len = 20; break;
                case AgentKind::Rg: p.c = 0.1; p.rollout_len = 10; alpha_batches = 4; break;
                case AgentKind::Elastic:
                    p.c = 10.0; p.rollout_len = 10; alpha_batches = 8; p.eta_r = 1.0; p.eta_t = 1.0;
                    break;
                case AgentKind::Scsa:
                    p.c = 10.0; p.rollout_len = 10; p.eta_r = 1.0; p.eta_t = 1.0; p.size_limit = 2;
                    break;
                case AgentKind::Rule: break;
            }
            break;
        case GameTag::TK:
            switch (kind) {
                case AgentKind::Mcts: p.c = 0.1; p.rollout_len = 20; break;
                case AgentKind::Mctsu: p.c = 1.0; p.rollout_len = 20; break;
                case AgentKind::Rg: p.c = 0.1; p.rollout_len = 10; alpha_batches = 8; break;
                case AgentKind::Elastic:
                    p.c = 1.0; p.rollout_len = 20; alpha_batches = 6; p.eta_r = 0.05; p.eta_t = 1.0;
                    break;
                case AgentKind::Scsa:
                    p.c = 1.0; p.rollout_len = 20; p.eta_r = 0.05; p.eta_t = 1.0; p.size_limit = 2;
                    break;
                case AgentKind::Rule: break;
            }
            break;
    }
    switch (kind) {
        case AgentKind::Rule: break;
        case AgentKind::Mcts: p.mode = SearchMode::Plain; break;
        case AgentKind::Mctsu: p.mode = SearchMode::UnitOrdered; break;
        case AgentKind::Rg: p.mode = SearchMode::Rg; break;
        case AgentKind::Elastic: p.mode = SearchMode::Elastic; break;
        case AgentKind::Scsa: p.mode = SearchMode::Scsa; break;
    }
    if (alpha_batches > 0)
        p.alpha_es = static_cast<std::uint64_t>(alpha_batches * p.batch);
    return p;
}

AgentSpec AgentSpec::make(GameTag game, AgentKind kind) {
    AgentSpec spec;
    spec.kind = kind;
    spec.params = default_params(game, kind);
    return spec;
}

AgentSpec AgentSpec::make(GameTag game, const std::string& name) {
    return make(game, agent_from_name(name));
}

void apply_param_overrides(const std::string& json_text, GameTag game, AgentKind kind,
                           SearchParams* params) {
    const json root = json::parse(json_text);
    if (!root.contains(game_name(game))) return;
    const json& g = root[game_name(game)];
    if (!g.contains(agent_name(kind))) return;
    const json& j = g[agent_name(kind)];
    if (j.contains("c")) params->c = j["c"];
    if (j.contains("k")) params->rollout_len = j["k"];
    if (j.contains("n_fm")) params->n_fm = j["n_fm"];
    if (j.contains("batch")) params->batch = j["batch"];
    if (j.contains("eta_r")) params->eta_r = j["eta_r"];
    if (j.contains("eta_t")) params->eta_t = j["eta_t"];
    if (j.contains("size_limit")) params->size_limit = j["size_limit"];
    if (j.contains("alpha")) params->alpha_es = static_cast<std::uint64_t>(
        j["alpha"].get<double>() * params->batch);
    if (j.contains("alpha_iterations")) params->alpha_es = j["alpha_iterations"];
    if (j.contains("strict_cap")) params->strict_cap = j["strict_cap"];
}

Agent::Agent(AgentSpec spec, int player, std::uint64_t match_seed)
    : spec_(std::move(spec)), player_(player), match_seed_(match_seed) {
    uses_ordering_ = spec_.kind != AgentKind::Rule && spec_.kind != AgentKind::Mcts;
}

void Agent::start_game(const GameState& initial) {
    move_counter_ = 0;
    if (!uses_ordering_) return;
    Rng rng(mix_seed(match_seed_, 0xa11ce + player_));
    ordering_ = make_unit_ordering(initial, player_, rng);
}

UnitAction Agent::act(const GameState& s, SearchStats* stats) {
    if (spec_.kind == AgentKind::Rule) {
        if (stats) *stats = SearchStats{};
        return rule_based_policy(s);
    }
    SearchParams p = spec_.params;
    p.seed = mix_seed(match_seed_, (static_cast<std::uint64_t>(player_) << 32) | move_counter_);
    ++move_counter_;
    return run_search(s, p, uses_ordering_ ? &ordering_ : nullptr, stats);
}

}  // namespace scsa
